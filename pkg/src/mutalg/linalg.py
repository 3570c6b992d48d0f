"""Exact linear algebra over Q: fraction-free determinants, incremental
echelon bases for rank/span tracking, and nullspaces.

Vectors on the Lie-algebra side are sparse dicts {index: Fraction}; dense
tuple-based helpers cover the small root-lattice computations.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence

SparseVec = dict[int, Fraction]


def det_bareiss(M: Sequence[Sequence[int]]) -> int:
    """Determinant of an integer matrix by one-step fraction-free
    (Bareiss) elimination; all intermediate divisions are exact."""
    n = len(M)
    if n == 0:
        return 1
    a = [list(map(int, row)) for row in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def mat_mul(A: Sequence[Sequence], B: Sequence[Sequence]) -> list[list]:
    rows, inner, cols = len(A), len(B), len(B[0])
    return [
        [sum(A[i][k] * B[k][j] for k in range(inner)) for j in range(cols)]
        for i in range(rows)
    ]


def mat_vec(A: Sequence[Sequence], v: Sequence) -> list:
    return [sum(A[i][k] * v[k] for k in range(len(v))) for i in range(len(A))]


def identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


class SparseBasis:
    """Incremental echelon basis of sparse rational vectors.

    insert() reduces the vector against the current pivots and records a new
    pivot row when a nonzero remainder survives; rank is the row count.
    """

    def __init__(self) -> None:
        self.pivots: dict[int, SparseVec] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, vec: SparseVec) -> SparseVec:
        v = dict(vec)
        for p in sorted(v):
            if p not in self.pivots:
                continue
            coeff = v.get(p)
            if not coeff:
                continue
            row = self.pivots[p]
            for idx, val in row.items():
                new = v.get(idx, Fraction(0)) - coeff * val
                if new:
                    v[idx] = new
                else:
                    v.pop(idx, None)
        return {i: c for i, c in v.items() if c}

    def insert(self, vec: SparseVec) -> bool:
        """Add a vector to the span; True if the rank grew."""
        v = self.reduce(vec)
        if not v:
            return False
        pivot = min(v)
        lead = v[pivot]
        normalized = {i: c / lead for i, c in v.items()}
        # keep existing rows reduced against the new pivot
        for row in self.pivots.values():
            coeff = row.get(pivot)
            if coeff:
                for idx, val in normalized.items():
                    new = row.get(idx, Fraction(0)) - coeff * val
                    if new:
                        row[idx] = new
                    else:
                        row.pop(idx, None)
        self.pivots[pivot] = normalized
        return True

    def contains(self, vec: SparseVec) -> bool:
        return not self.reduce(vec)


def sparse_add(u: SparseVec, v: SparseVec) -> SparseVec:
    out = dict(u)
    for i, c in v.items():
        new = out.get(i, Fraction(0)) + c
        if new:
            out[i] = new
        else:
            out.pop(i, None)
    return out


def sparse_scale(u: SparseVec, c) -> SparseVec:
    if not c:
        return {}
    frac = Fraction(c)
    return {i: v * frac for i, v in u.items()}


def sparse_eq(u: SparseVec, v: SparseVec) -> bool:
    return sparse_add(u, sparse_scale(v, -1)) == {}


def sparse_proportional(u: SparseVec, v: SparseVec) -> bool:
    if not u or not v:
        return not u and not v
    if set(u) != set(v):
        return False
    pivot = min(u)
    ratio = u[pivot] / v[pivot]
    return all(u[i] == ratio * v[i] for i in u)


def rank(rows: Iterable[Sequence]) -> int:
    basis = SparseBasis()
    for row in rows:
        basis.insert({i: Fraction(x) for i, x in enumerate(row) if x})
    return basis.rank


def nullspace(rows: Sequence[Sequence]) -> list[tuple[Fraction, ...]]:
    """Basis of {x : A x = 0} by rational Gauss-Jordan elimination."""
    if not rows:
        return []
    m, n = len(rows), len(rows[0])
    a = [[Fraction(rows[i][j]) for j in range(n)] for i in range(m)]
    pivot_cols: list[int] = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        lead = a[r][c]
        a[r] = [x / lead for x in a[r]]
        for i in range(m):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivot_cols.append(c)
        r += 1
        if r == m:
            break
    free_cols = [c for c in range(n) if c not in pivot_cols]
    basis = []
    for fc in free_cols:
        vec = [Fraction(0)] * n
        vec[fc] = Fraction(1)
        for row_idx, pc in enumerate(pivot_cols):
            vec[pc] = -a[row_idx][fc]
        basis.append(tuple(vec))
    return basis


def solve_unique(A: Sequence[Sequence], b: Sequence) -> Optional[list[Fraction]]:
    """Solve A x = b when A is square and invertible; None when singular."""
    n = len(A)
    aug = [
        [Fraction(A[i][j]) for j in range(n)] + [Fraction(b[i])] for i in range(n)
    ]
    for c in range(n):
        piv = next((i for i in range(c, n) if aug[i][c] != 0), None)
        if piv is None:
            return None
        aug[c], aug[piv] = aug[piv], aug[c]
        lead = aug[c][c]
        aug[c] = [x / lead for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return [aug[i][n] for i in range(n)]
