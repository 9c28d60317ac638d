"""Extensions of free products of cyclics by a distinguished fiber generator.

Realizes groups presented as

    < h, x1, ..., xr |  xj^(alpha_j) = h^(c_j)   (torsion generators),
                        xj h xj^-1 = h^(s_j)     (s_j = +-1, torsion parts +1) >

whose quotient by <h> is a free product of cyclic groups.  Bounded-base
circle-fibered presentations (trefoil-type knot groups, solid tori, and
their relatives) land exactly in this family, with h the fiber generator.

Normal form: h^k * lift(w) with w a reduced syllable word of the quotient
free product; the pair (k, w) is unique because the group is an iterated
amalgam/HNN over the infinite cyclic subgroup generated by h, with the
lifted powers xj^0..xj^(alpha_j - 1) as coset representatives.
"""

from __future__ import annotations

from dataclasses import dataclass

from .base import INFINITE, GroupElement, GroupUsageError, StructuredGroup, unique_names


@dataclass(frozen=True)
class TorsionPart:
    """Generator x with x^order = h^fiber_carry; commutes with h."""

    name: str
    order: int
    fiber_carry: int

    def __post_init__(self):
        if self.order < 2:
            raise GroupUsageError("torsion part order must be >= 2")


@dataclass(frozen=True)
class FreePart:
    """Infinite-order generator x with x h x^-1 = h^sign."""

    name: str
    sign: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise GroupUsageError("free part sign must be +1 or -1")


Part = TorsionPart | FreePart


class FiberExtension(StructuredGroup):
    """Payload: (k, word) with word a tuple of (part index, exponent)."""

    def __init__(self, parts: list[Part], fiber_name: str = "h"):
        self.parts = tuple(parts)
        self.fiber_name = fiber_name
        unique_names([[fiber_name], [p.name for p in self.parts]])

    def signature(self):
        sig = []
        for p in self.parts:
            if isinstance(p, TorsionPart):
                sig.append(("torsion", p.name, p.order, p.fiber_carry))
            else:
                sig.append(("free", p.name, p.sign))
        return ("fiber_extension", tuple(sig), self.fiber_name)

    def identity_payload(self):
        return (0, ())

    def fiber(self) -> GroupElement:
        return self.element((1, ()))

    def _syllable_sign(self, j: int, e: int) -> int:
        part = self.parts[j]
        if isinstance(part, FreePart) and part.sign == -1 and e % 2:
            return -1
        return 1

    def _chi(self, word) -> int:
        sign = 1
        for j, e in word:
            sign *= self._syllable_sign(j, e)
        return sign

    def _append(self, stack: list, k: int, j: int, e: int) -> int:
        """Append syllable x_j^e to the lifted word; returns the updated
        fiber exponent (carries from torsion relations migrate to the front,
        picking up the sign character of the prefix they cross)."""
        if stack and stack[-1][0] == j:
            e = stack[-1][1] + e
            stack.pop()
        part = self.parts[j]
        if isinstance(part, TorsionPart):
            carry, e = divmod(e, part.order)
            if carry:
                k += part.fiber_carry * carry * self._chi(stack)
        if e != 0:
            stack.append((j, e))
        return k

    def multiply_payloads(self, a, b):
        k1, w1 = a
        k2, w2 = b
        k = k1 + self._chi(w1) * k2
        stack = list(w1)
        for j, e in w2:
            k = self._append(stack, k, j, e)
        return (k, tuple(stack))

    def invert_payload(self, a):
        k, w = a
        out_k = -k * self._chi(w)
        stack: list = []
        for j, e in reversed(w):
            out_k = self._append(stack, out_k, j, -e)
        return (out_k, tuple(stack))

    def part_generator(self, j: int) -> GroupElement:
        return self.element((0, ((j, 1),)))

    def generator_payloads(self):
        out = [(p.name, (0, ((j, 1),))) for j, p in enumerate(self.parts)]
        out.append((self.fiber_name, (1, ())))
        return out

    def payload_key(self, payload):
        k, w = payload
        return (len(w), abs(k), 0 if k >= 0 else 1, w)

    def render_payload(self, payload):
        k, w = payload
        letters = []
        if k:
            letters.append((self.fiber_name, k))
        letters.extend((self.parts[j].name, e) for j, e in w)
        return letters

    def payload_str(self, payload):
        k, w = payload
        parts = []
        if k:
            parts.append(self.fiber_name if k == 1 else f"{self.fiber_name}^{k}")
        for j, e in w:
            name = self.parts[j].name
            parts.append(name if e == 1 else f"{name}^{e}")
        return "*".join(parts) if parts else "1"

    def order(self):
        return INFINITE

    def fiber_is_central(self) -> bool:
        return all(not (isinstance(p, FreePart) and p.sign == -1) for p in self.parts)

    def describe(self):
        return f"FiberExtension({len(self.parts)} parts)"
