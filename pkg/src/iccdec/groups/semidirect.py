"""Z^n semidirect Z for an integer matrix of determinant +-1 (n <= 3)."""

from __future__ import annotations

from .base import INFINITE, GroupUsageError, StructuredGroup

Matrix = tuple[tuple[int, ...], ...]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n)
    )


def mat_vec(a: Matrix, v: tuple[int, ...]) -> tuple[int, ...]:
    n = len(a)
    return tuple(sum(a[i][k] * v[k] for k in range(n)) for i in range(n))


def identity_matrix(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_det(a: Matrix) -> int:
    n = len(a)
    if n == 1:
        return a[0][0]
    if n == 2:
        return a[0][0] * a[1][1] - a[0][1] * a[1][0]
    if n == 3:
        return (
            a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
            - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
            + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
        )
    raise GroupUsageError("only ranks 1..3 are supported")


def mat_inverse_unimodular(a: Matrix) -> Matrix:
    """Exact inverse of an integer matrix with determinant +-1."""
    n = len(a)
    det = mat_det(a)
    if det not in (1, -1):
        raise GroupUsageError("matrix is not invertible over the integers")
    if n == 1:
        return ((det,),)
    if n == 2:
        adj = ((a[1][1], -a[0][1]), (-a[1][0], a[0][0]))
    else:
        cof = [[0] * 3 for _ in range(3)]
        for i in range(3):
            for j in range(3):
                rows = [r for r in range(3) if r != i]
                cols = [c for c in range(3) if c != j]
                minor = (
                    a[rows[0]][cols[0]] * a[rows[1]][cols[1]]
                    - a[rows[0]][cols[1]] * a[rows[1]][cols[0]]
                )
                cof[i][j] = (-1) ** (i + j) * minor
        adj = tuple(tuple(cof[j][i] for j in range(3)) for i in range(3))
    return tuple(tuple(x * det for x in row) for row in adj)


class SemidirectZnByZ(StructuredGroup):
    """Z^n x|_phi Z: payload (v, m) with product (v, m)(w, k) = (v + phi^m w, m + k).

    Generators: basis vectors e1..en and the exponent generator t.
    """

    def __init__(self, rank: int, phi, exponent_name: str = "t", basis_names=None):
        if rank not in (1, 2, 3):
            raise GroupUsageError("rank must be 1, 2 or 3")
        matrix = tuple(tuple(int(x) for x in row) for row in phi)
        if len(matrix) != rank or any(len(row) != rank for row in matrix):
            raise GroupUsageError("phi must be a rank x rank integer matrix")
        if mat_det(matrix) not in (1, -1):
            raise GroupUsageError("phi must have determinant +1 or -1")
        self.rank = rank
        self.phi = matrix
        self.phi_inv = mat_inverse_unimodular(matrix)
        self.exponent_name = exponent_name
        if basis_names is None:
            basis_names = tuple(f"e{i + 1}" for i in range(rank))
        basis_names = tuple(basis_names)
        if len(basis_names) != rank or len(set(basis_names)) != rank or exponent_name in basis_names:
            raise GroupUsageError("basis names must be distinct and exclude the exponent name")
        self.basis_names = basis_names
        self._power_cache: dict[int, Matrix] = {0: identity_matrix(rank)}

    def signature(self):
        return ("semidirect_zn_by_z", self.rank, self.phi, self.exponent_name, self.basis_names)

    def phi_power(self, m: int) -> Matrix:
        cache = self._power_cache
        if m not in cache:
            if m > 0:
                cache[m] = mat_mul(self.phi_power(m - 1), self.phi)
            else:
                cache[m] = mat_mul(self.phi_power(m + 1), self.phi_inv)
        return cache[m]

    def identity_payload(self):
        return ((0,) * self.rank, 0)

    def multiply_payloads(self, a, b):
        v, m = a
        w, k = b
        moved = mat_vec(self.phi_power(m), w)
        return (tuple(x + y for x, y in zip(v, moved)), m + k)

    def invert_payload(self, a):
        v, m = a
        moved = mat_vec(self.phi_power(-m), v)
        return (tuple(-x for x in moved), -m)

    def generator_payloads(self):
        out = []
        for i in range(self.rank):
            vec = tuple(1 if j == i else 0 for j in range(self.rank))
            out.append((self.basis_names[i], (vec, 0)))
        out.append((self.exponent_name, ((0,) * self.rank, 1)))
        return out

    def payload_key(self, payload):
        v, m = payload
        return (abs(m) + sum(abs(x) for x in v), m, v)

    def render_payload(self, payload):
        v, m = payload
        letters = [(self.basis_names[i], x) for i, x in enumerate(v) if x]
        if m:
            letters.append((self.exponent_name, m))
        return letters

    def payload_str(self, payload):
        v, m = payload
        return f"(({', '.join(str(x) for x in v)}), {m})"

    def order(self):
        return INFINITE

    def describe(self):
        return f"Z^{self.rank} x| Z"
