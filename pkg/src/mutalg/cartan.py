"""Cartan counterparts of gss matrices, their mutation rule, the elementary
T/J/U transforms, and positivity of quasi-Cartan companions.

See diagram.py for the convention table; in particular d_i c_ij = d_j c_ji
and the classical Cartan matrix of each Dynkin type is stored with
all off-diagonal entries nonpositive.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .diagram import DynkinType
from .errors import SemanticError
from .gss import GssMatrix
from .quiver import Arrow, SignedValuedQuiver

IntRows = tuple[tuple[int, ...], ...]


@dataclass(frozen=True, slots=True)
class CartanCounterpart:
    entries: IntRows
    d: tuple[int, ...]

    def __post_init__(self):
        n = len(self.entries)
        if any(len(row) != n for row in self.entries):
            raise SemanticError("Cartan counterpart must be square")
        if len(self.d) != n or any(x <= 0 for x in self.d):
            raise SemanticError("symmetrizer must be n positive integers")
        for i in range(n):
            if self.entries[i][i] != 2:
                raise SemanticError("diagonal entries must equal 2")
            for j in range(n):
                if self.d[i] * self.entries[i][j] != self.d[j] * self.entries[j][i]:
                    raise SemanticError("D*C must be symmetric")

    @property
    def n(self) -> int:
        return len(self.entries)

    def c(self, i: int, j: int) -> int:
        """Entry c_ij, 1-based."""
        return self.entries[i - 1][j - 1]

    def gram(self) -> IntRows:
        """M = D*C, the symmetric bilinear form on the formal simple roots."""
        return tuple(
            tuple(self.d[i] * self.entries[i][j] for j in range(self.n))
            for i in range(self.n)
        )

    @staticmethod
    def from_rows(rows: Sequence[Sequence[int]], d: Sequence[int]) -> "CartanCounterpart":
        return CartanCounterpart(tuple(tuple(r) for r in rows), tuple(d))

    def __str__(self) -> str:
        width = max(len(str(x)) for row in self.entries for x in row)
        return "\n".join(
            "[" + " ".join(str(x).rjust(width) for x in row) + "]"
            for row in self.entries
        )


def cartan_counterpart(B: GssMatrix) -> CartanCounterpart:
    """c_ii = 2 and c_ij = |a| - |b| for the entry b_ij = a + b t."""
    n = B.n
    rows = [
        [
            2 if i == j else abs(B.entries[i][j].a) - abs(B.entries[i][j].b)
            for j in range(n)
        ]
        for i in range(n)
    ]
    return CartanCounterpart.from_rows(rows, B.d)


def cartan_of_quiver(Q: SignedValuedQuiver) -> CartanCounterpart:
    """c_ij = v1(alpha) for an arrow alpha: i -> j, v2(alpha) for j -> i."""
    rows = [[2 if i == j else 0 for j in range(Q.n)] for i in range(Q.n)]
    for a in Q.arrows:
        rows[a.src - 1][a.tgt - 1] = a.v1
        rows[a.tgt - 1][a.src - 1] = a.v2
    return CartanCounterpart.from_rows(rows, Q.d)


def mutate_cartan(C: CartanCounterpart, Q: SignedValuedQuiver, k: int) -> CartanCounterpart:
    """Cartan counterpart of the mutated quiver: c_ij - c_ik c_kj when
    exactly one of i, j has an arrow to k in Q, unchanged otherwise."""
    if not 1 <= k <= Q.n:
        raise SemanticError(f"vertex {k} out of range 1..{Q.n}")
    into_k = {a.src for a in Q.arrows_into(k)}
    n = C.n
    rows = [list(row) for row in C.entries]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            if (i in into_k) != (j in into_k):
                rows[i - 1][j - 1] = C.c(i, j) - C.c(i, k) * C.c(k, j)
    return CartanCounterpart.from_rows(rows, C.d)


def _elementary(n: int, s: int, r: int, sigma: int) -> list[list[int]]:
    m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    m[s - 1][r - 1] += sigma
    return m


def transform_T(C: CartanCounterpart, s: int, r: int, sigma: int) -> CartanCounterpart:
    """T^sigma_{sr}(C) = D^{-1} E^sigma_{rs} D C E^sigma_{sr}."""
    if s == r:
        raise SemanticError("T requires distinct indices")
    n = C.n
    if not (1 <= s <= n and 1 <= r <= n):
        raise SemanticError("index out of range")
    left = _elementary(n, r, s, sigma)  # E^sigma_{rs}
    right = _elementary(n, s, r, sigma)  # E^sigma_{sr}
    frac = [
        [
            Fraction(sum(left[i][a] * C.d[a] * C.entries[a][b] * right[b][j]
                         for a in range(n) for b in range(n)), C.d[i])
            for j in range(n)
        ]
        for i in range(n)
    ]
    rows = []
    for row in frac:
        out = []
        for x in row:
            if x.denominator != 1:
                raise SemanticError("transform left the integer lattice")
            out.append(int(x))
        rows.append(out)
    return CartanCounterpart.from_rows(rows, C.d)


def transform_J(C: CartanCounterpart, r: int) -> CartanCounterpart:
    """J_r(C) = I_r C I_r: negate row r and column r off the diagonal."""
    if not 1 <= r <= C.n:
        raise SemanticError("index out of range")
    rows = [list(row) for row in C.entries]
    for i in range(C.n):
        rows[r - 1][i] = -rows[r - 1][i]
        rows[i][r - 1] = -rows[i][r - 1]
    rows[r - 1][r - 1] = 2
    return CartanCounterpart.from_rows(rows, C.d)


def transform_U(C: CartanCounterpart, s: int, r: int) -> CartanCounterpart:
    """U_{sr}(C) = T^{-c_sr}_{sr}(C)."""
    return transform_T(C, s, r, -C.c(s, r))


def leading_principal_minors(M: Sequence[Sequence[int]]) -> list[int]:
    """Exact integer determinants of the leading principal submatrices."""
    from .linalg import det_bareiss

    return [
        det_bareiss([[M[i][j] for j in range(k)] for i in range(k)])
        for k in range(1, len(M) + 1)
    ]


def is_positive_definite(M: Sequence[Sequence[int]]) -> bool:
    return all(m > 0 for m in leading_principal_minors(M))


def is_positive_quasi_cartan(
    C: CartanCounterpart, Btilde: Optional[Sequence[Sequence[int]]] = None
) -> bool:
    """Quasi-Cartan companion test: diagonal 2, |c_ij| = |btilde_ij| off the
    diagonal, and D*C positive definite (exact leading principal minors)."""
    if Btilde is not None:
        n = C.n
        for i in range(n):
            for j in range(n):
                if i != j and abs(C.entries[i][j]) != abs(Btilde[i][j]):
                    return False
    return is_positive_definite(C.gram())


def classical_cartan(t: DynkinType) -> CartanCounterpart:
    """The Cartan matrix of a Dynkin type in the package's conventions,
    with its minimal symmetrizer; all off-diagonal entries nonpositive."""
    n = t.rank
    edges: list[tuple[int, int, int, int]]  # (i, j, c_ij, c_ji)
    if t.family == "A":
        edges = [(i, i + 1, -1, -1) for i in range(1, n)]
        d = [1] * n
    elif t.family == "B":
        edges = [(i, i + 1, -1, -1) for i in range(1, n - 1)]
        edges.append((n - 1, n, -2, -1))
        d = [1] * (n - 1) + [2]
    elif t.family == "C":
        edges = [(i, i + 1, -1, -1) for i in range(1, n - 1)]
        edges.append((n - 1, n, -1, -2))
        d = [2] * (n - 1) + [1]
    elif t.family == "D":
        edges = [(i, i + 1, -1, -1) for i in range(1, n - 1)]
        edges.append((n - 2, n, -1, -1))
        d = [1] * n
    elif t.family == "E":
        # Bourbaki labelling: 1-3-4-5-...-n path, 2 attached to 4
        edges = [(1, 3, -1, -1), (3, 4, -1, -1), (2, 4, -1, -1)]
        edges += [(i, i + 1, -1, -1) for i in range(4, n)]
        d = [1] * n
    elif t.family == "F":
        edges = [(1, 2, -1, -1), (2, 3, -2, -1), (3, 4, -1, -1)]
        d = [1, 1, 2, 2]
    else:  # G2
        edges = [(1, 2, -3, -1)]
        d = [1, 3]
    rows = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j, cij, cji in edges:
        rows[i - 1][j - 1] = cij
        rows[j - 1][i - 1] = cji
    return CartanCounterpart.from_rows(rows, d)


def dynkin_quiver(t: DynkinType) -> SignedValuedQuiver:
    """Canonical embedding of the Dynkin diagram: all arrows negative,
    oriented from the higher label to the lower one along each edge."""
    C = classical_cartan(t)
    arrows = []
    for i in range(1, C.n + 1):
        for j in range(1, i):
            if C.c(i, j) != 0:
                arrows.append(Arrow(i, j, C.c(i, j), C.c(j, i)))
    return SignedValuedQuiver(C.n, frozenset(arrows), C.d)


def dynkin_matrix(t: DynkinType) -> GssMatrix:
    """B_Delta = t * Btilde_Delta for the canonical all-negative quiver."""
    from .quiver import matrix_from_quiver

    return matrix_from_quiver(dynkin_quiver(t))
