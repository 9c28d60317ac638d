"""Core abstractions: structured groups, elements, finite multiplication tables.

Every group construction reduces elements to a canonical payload: two
elements are equal iff their payloads are equal.  All values are immutable
after construction and all operations are pure, so groups and elements can
be shared freely across threads.
"""

from __future__ import annotations

import math
import threading
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Iterable, Optional, Sequence


class GroupUsageError(ValueError):
    """Raised when an operation is applied outside its contract."""


class NotEnumerableError(GroupUsageError):
    """Raised when a construction has no implemented element arithmetic."""


INFINITE = math.inf

Letter = tuple[str, int]  # generator name, exponent


@dataclass(frozen=True)
class GeneratorSymbol:
    """A named generator together with the construction block it lives in."""

    name: str
    factor_index: int = 0


class GroupElement:
    """An element of a StructuredGroup, held in canonical normal form."""

    __slots__ = ("group", "payload")

    def __init__(self, group: "StructuredGroup", payload: Any):
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "payload", payload)

    def __setattr__(self, name, value):
        raise AttributeError("GroupElement is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, GroupElement)
            and self.group == other.group
            and self.payload == other.payload
        )

    def __hash__(self):
        return hash((type(self.group).__name__, self.payload))

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return multiply(self, other)

    def __invert__(self) -> "GroupElement":
        return invert(self)

    def __pow__(self, n: int) -> "GroupElement":
        if not isinstance(n, int):
            raise GroupUsageError("exponent must be an integer")
        if n < 0:
            return invert(self) ** (-n)
        result = self.group.identity()
        base = self
        while n:
            if n & 1:
                result = multiply(result, base)
            base = multiply(base, base)
            n >>= 1
        return result

    def is_identity(self) -> bool:
        return self.payload == self.group.identity_payload()

    def key(self):
        """Deterministic total-order key within the owning group."""
        return self.group.payload_key(self.payload)

    def __repr__(self):
        return self.group.payload_str(self.payload)


class StructuredGroup(ABC):
    """A group described by construction, with computable normal forms."""

    @abstractmethod
    def signature(self) -> tuple:
        """Structural identity; equal signatures mean the same group."""

    @abstractmethod
    def identity_payload(self):
        ...

    @abstractmethod
    def multiply_payloads(self, a, b):
        ...

    @abstractmethod
    def invert_payload(self, a):
        ...

    @abstractmethod
    def generator_payloads(self) -> list[tuple[str, Any]]:
        """The designated finite generating set, as (name, payload) pairs."""

    @abstractmethod
    def payload_key(self, payload) -> tuple:
        """Total order key; the identity payload must be minimal."""

    @abstractmethod
    def render_payload(self, payload) -> list[Letter]:
        """A generator word evaluating back to the payload."""

    @abstractmethod
    def payload_str(self, payload) -> str:
        ...

    @abstractmethod
    def order(self) -> float:
        """Group order as an int, or INFINITE."""

    # -- derived API ------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, StructuredGroup) and self.signature() == other.signature()

    def __hash__(self):
        return hash(self.signature())

    def identity(self) -> GroupElement:
        return GroupElement(self, self.identity_payload())

    def element(self, payload) -> GroupElement:
        return GroupElement(self, payload)

    def generators(self) -> list[tuple[GeneratorSymbol, GroupElement]]:
        out = []
        for index, (name, payload) in enumerate(self.generator_payloads()):
            out.append((GeneratorSymbol(name, index), GroupElement(self, payload)))
        return out

    def generator_map(self) -> dict[str, GroupElement]:
        return {sym.name: g for sym, g in self.generators()}

    def generator_element(self, name: str) -> GroupElement:
        table = self.generator_map()
        if name not in table:
            raise GroupUsageError(
                f"unknown generator {name!r}; this group has {sorted(table)}"
            )
        return table[name]

    def reduce_letters(self, letters: Iterable[Letter]) -> GroupElement:
        """Evaluate a sequence of (generator name, exponent) pairs."""
        table = self.generator_map()
        acc = self.identity()
        for name, exp in letters:
            if name not in table:
                raise GroupUsageError(
                    f"unknown generator {name!r}; this group has {sorted(table)}"
                )
            acc = multiply(acc, table[name] ** exp)
        return acc

    def __repr__(self):
        return self.describe()

    def describe(self) -> str:
        return type(self).__name__


def _check_same_owner(a: GroupElement, b: GroupElement) -> None:
    if a.group != b.group:
        raise GroupUsageError("elements belong to different groups")


def multiply(g: GroupElement, h: GroupElement) -> GroupElement:
    """Product g*h in canonical normal form."""
    _check_same_owner(g, h)
    return GroupElement(g.group, g.group.multiply_payloads(g.payload, h.payload))


def invert(g: GroupElement) -> GroupElement:
    return GroupElement(g.group, g.group.invert_payload(g.payload))


def conjugate(g: GroupElement, by: GroupElement) -> GroupElement:
    """by * g * by^-1 in canonical normal form."""
    _check_same_owner(g, by)
    return multiply(multiply(by, g), invert(by))


def commutes_with_generators(g: GroupElement) -> bool:
    """Exact centrality test: g commutes with every designated generator.

    Because generators generate, a True result proves g is central.
    """
    return all(conjugate(g, gen) == g for _, gen in g.group.generators())


def reduce_word(group: StructuredGroup, letters: Sequence[Letter]) -> GroupElement:
    """Canonical normal form of a generator word."""
    return group.reduce_letters(letters)


def render_word(g: GroupElement) -> list[Letter]:
    """A generator word that reduce_word maps back to g."""
    return g.group.render_payload(g.payload)


def enumerate_ball(group: StructuredGroup, radius: int) -> list[GroupElement]:
    """All elements of word length <= radius over the designated generators.

    Inverses of generators count as single letters.  Order: breadth-first by
    length, then by payload key; deterministic across runs.
    """
    elements, _ = ball_with_lengths(group, radius)
    return elements


_BALL_CACHES: dict[tuple, dict] = {}
_BALL_LOCK = threading.RLock()


def ball_with_lengths(group: StructuredGroup, radius: int) -> tuple[list[GroupElement], list[int]]:
    """enumerate_ball plus word length per element (same order).

    Ball levels are cached per group signature; the lock keeps concurrent
    callers on the same group consistent.
    """
    if radius < 0:
        raise GroupUsageError("radius must be nonnegative")
    with _BALL_LOCK:
        cache = _BALL_CACHES.setdefault(group.signature(), {})
        if "levels" not in cache:
            identity = group.identity()
            cache["levels"] = [[identity]]
            cache["seen"] = {identity.payload: 0}
        levels: list[list[GroupElement]] = cache["levels"]
        seen: dict = cache["seen"]
        step_elements = []
        for _, gen in group.generators():
            step_elements.append(gen)
            inv = invert(gen)
            if inv.payload != gen.payload:
                step_elements.append(inv)
        while len(levels) <= radius:
            frontier = levels[-1]
            depth = len(levels)
            fresh = {}
            for g in frontier:
                for s in step_elements:
                    candidate = multiply(g, s)
                    if candidate.payload not in seen and candidate.payload not in fresh:
                        fresh[candidate.payload] = candidate
            level = sorted(fresh.values(), key=lambda e: e.key())
            for e in level:
                seen[e.payload] = depth
            levels.append(level)
            if not level:
                break  # the whole group has been enumerated
        elements: list[GroupElement] = []
        lengths: list[int] = []
        for depth, level in enumerate(levels[: radius + 1]):
            elements.extend(level)
            lengths.extend([depth] * len(level))
    return elements, lengths


class FiniteGroupTable:
    """A finite group given by an explicit multiplication table.

    Index 0 is the identity.  table[i][j] is the index of element i*j.
    Optional element names default to "1", "f1", "f2", ...
    """

    def __init__(self, table: Sequence[Sequence[int]], names: Optional[Sequence[str]] = None):
        n = len(table)
        if n < 1:
            raise GroupUsageError("multiplication table must be nonempty")
        for row in table:
            if len(row) != n or any(not isinstance(x, int) or not (0 <= x < n) for x in row):
                raise GroupUsageError("multiplication table is not square over valid indices")
        self.size = n
        self.table = tuple(tuple(row) for row in table)
        if names is None:
            names = ["1"] + [f"f{i}" for i in range(1, n)]
        if len(names) != n or len(set(names)) != n:
            raise GroupUsageError("element names must be distinct and match the table size")
        self.names = tuple(names)
        self._validate()
        self.inverse = tuple(self._find_inverse(i) for i in range(n))

    def _validate(self):
        n = self.size
        t = self.table
        for i in range(n):
            if t[0][i] != i or t[i][0] != i:
                raise GroupUsageError("index 0 must be the identity of the table")
        for i in range(n):
            if sorted(t[i]) != list(range(n)) or sorted(t[j][i] for j in range(n)) != list(range(n)):
                raise GroupUsageError("table rows and columns must be permutations")
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if t[t[i][j]][k] != t[i][t[j][k]]:
                        raise GroupUsageError("multiplication table is not associative")

    def _find_inverse(self, i: int) -> int:
        for j in range(self.size):
            if self.table[i][j] == 0 and self.table[j][i] == 0:
                return j
        raise GroupUsageError(f"element {i} has no inverse in the table")

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def inv(self, i: int) -> int:
        return self.inverse[i]

    def signature(self) -> tuple:
        return ("table", self.table, self.names)

    def subgroups(self) -> list[frozenset[int]]:
        """All subgroups, as frozensets of indices (identity included)."""
        found = {frozenset([0])}
        frontier = [frozenset([0])]
        while frontier:
            base = frontier.pop()
            for x in range(1, self.size):
                if x in base:
                    continue
                closure = set(base) | {x}
                changed = True
                while changed:
                    changed = False
                    for a in list(closure):
                        for b in list(closure):
                            c = self.table[a][b]
                            if c not in closure:
                                closure.add(c)
                                changed = True
                    for a in list(closure):
                        if self.inverse[a] not in closure:
                            closure.add(self.inverse[a])
                            changed = True
                extended = frozenset(closure)
                if extended not in found:
                    found.add(extended)
                    frontier.append(extended)
        return sorted(found, key=lambda s: (len(s), sorted(s)))


def cyclic_table(n: int, names: Optional[Sequence[str]] = None) -> FiniteGroupTable:
    """The multiplication table of Z/n."""
    if n < 1:
        raise GroupUsageError("cyclic table order must be >= 1")
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return FiniteGroupTable(table, names)


def unique_names(groups_names: Iterable[Iterable[str]]) -> None:
    seen: set[str] = set()
    for names in groups_names:
        for name in names:
            if name in seen:
                raise GroupUsageError(f"generator name {name!r} is not unique in the construction")
            seen.add(name)
