"""Generalized skew-symmetrizable matrices over Z[t]/(t^2 - 1) and their
signed mutation.

Vertex indices in the public API are 1-based, matching the usual labelling
of quiver vertices; storage is 0-based tuples.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Optional, Sequence

from .errors import SemanticError
from .tring import TElem, ZERO

Entries = tuple[tuple[TElem, ...], ...]


def _as_entries(rows: Sequence[Sequence[TElem]]) -> Entries:
    return tuple(tuple(row) for row in rows)


def find_symmetrizer(rows: Sequence[Sequence[TElem]]) -> Optional[tuple[int, ...]]:
    """Solve d_i * b_ij = -d_j * b_ji for positive integers d_i.

    Returns the componentwise-minimal solution (gcd 1 on each connected
    component of the support graph), or None if no solution exists.
    """
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise SemanticError("entries table must be square")
    ratio: list[Optional[Fraction]] = [None] * n
    result = [0] * n
    for start in range(n):
        if ratio[start] is not None:
            continue
        ratio[start] = Fraction(1)
        component = [start]
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                bij, bji = rows[i][j], rows[j][i]
                if bij.is_zero() and bji.is_zero():
                    continue
                if bij.is_zero() or bji.is_zero():
                    return None
                if (bji.a == 0) != (bij.a == 0) or (bji.b == 0) != (bij.b == 0):
                    return None
                # d_i * bij = -d_j * bji forces d_j/d_i = -a/a' = -b/b'
                cands = []
                if bji.a != 0:
                    cands.append(Fraction(-bij.a, bji.a))
                if bji.b != 0:
                    cands.append(Fraction(-bij.b, bji.b))
                if not cands or any(c != cands[0] for c in cands):
                    return None
                q = cands[0]
                if q <= 0:
                    return None
                expect = ratio[i] * q
                if ratio[j] is None:
                    ratio[j] = expect
                    component.append(j)
                    stack.append(j)
                elif ratio[j] != expect:
                    return None
        denom_lcm = 1
        for v in component:
            q = ratio[v]
            denom_lcm = denom_lcm * q.denominator // gcd(denom_lcm, q.denominator)
        scaled = [int(ratio[v] * denom_lcm) for v in component]
        g = 0
        for s in scaled:
            g = gcd(g, s)
        for v, s in zip(component, scaled):
            result[v] = s // g
    d = tuple(result)
    if _is_symmetrizer(rows, d):
        return d
    return None


def _is_symmetrizer(rows: Sequence[Sequence[TElem]], d: Sequence[int]) -> bool:
    n = len(rows)
    if len(d) != n or any(di <= 0 for di in d):
        return False
    for i in range(n):
        for j in range(n):
            if rows[i][j].scale(d[i]) != -rows[j][i].scale(d[j]):
                return False
    return True


@dataclass(frozen=True, slots=True)
class GssMatrix:
    """Square matrix over Z[t]/(t^2-1) with d_i b_ij = -d_j b_ji, d_i > 0."""

    entries: Entries
    d: tuple[int, ...]

    def __post_init__(self):
        n = len(self.entries)
        if any(len(row) != n for row in self.entries):
            raise SemanticError("matrix must be square")
        if not _is_symmetrizer(self.entries, self.d):
            raise SemanticError("not skew-symmetrizable by the given symmetrizer")

    @property
    def n(self) -> int:
        return len(self.entries)

    @staticmethod
    def from_entries(
        rows: Sequence[Sequence[TElem]], d: Optional[Sequence[int]] = None
    ) -> "GssMatrix":
        """Build a gss matrix, computing a minimal symmetrizer if none given."""
        ent = _as_entries(rows)
        if d is None:
            found = find_symmetrizer(ent)
            if found is None:
                raise SemanticError("entries admit no positive symmetrizer")
            return GssMatrix(ent, found)
        return GssMatrix(ent, tuple(d))

    @staticmethod
    def from_int_rows(
        rows: Sequence[Sequence[int]], d: Optional[Sequence[int]] = None
    ) -> "GssMatrix":
        return GssMatrix.from_entries(
            [[TElem(v, 0) for v in row] for row in rows], d
        )

    @staticmethod
    def t_embedding(
        rows: Sequence[Sequence[int]], d: Optional[Sequence[int]] = None
    ) -> "GssMatrix":
        """The canonical embedding B = t * Btilde of an integer matrix."""
        return GssMatrix.from_entries(
            [[TElem(0, v) for v in row] for row in rows], d
        )

    @staticmethod
    def zero(n: int, d: Optional[Sequence[int]] = None) -> "GssMatrix":
        return GssMatrix(
            tuple(tuple(ZERO for _ in range(n)) for _ in range(n)),
            tuple(d) if d is not None else (1,) * n,
        )

    def entry(self, i: int, j: int) -> TElem:
        """Entry b_ij with 1-based indices."""
        return self.entries[i - 1][j - 1]

    def _check_vertex(self, k: int) -> int:
        if not 1 <= k <= self.n:
            raise SemanticError(f"vertex {k} out of range 1..{self.n}")
        return k - 1

    def is_pure(self) -> bool:
        """Every entry lies in Z or in tZ."""
        return all(x.is_pure() for row in self.entries for x in row)

    def specialize(self) -> tuple[tuple[int, ...], ...]:
        """Evaluate t = 1, giving a classical skew-symmetrizable matrix."""
        return tuple(tuple(x.eval_at(1) for x in row) for row in self.entries)

    def support_edges(self) -> list[tuple[int, int]]:
        """Unordered pairs {i, j} (1-based, i < j) with b_ij != 0."""
        return [
            (i + 1, j + 1)
            for i in range(self.n)
            for j in range(i + 1, self.n)
            if not self.entries[i][j].is_zero()
        ]

    def key(self) -> tuple:
        """Hashable identity used for mutation-class deduplication."""
        return tuple((x.a, x.b) for row in self.entries for x in row)

    def __str__(self) -> str:
        cells = [[str(x) for x in row] for row in self.entries]
        width = max(len(c) for row in cells for c in row)
        return "\n".join(
            "[" + "  ".join(c.rjust(width) for c in row) + "]" for row in cells
        )


def mutate_matrix(B: GssMatrix, k: int) -> GssMatrix:
    """Signed mutation at vertex k (1-based), total on every gss matrix.

    Four-case rule: row/column k entries pick up -1 or -t according to sign,
    and each composable product through k with positive sign contributes
    t*(b_ij + sgn(b_ik) b_ik b_kj).
    """
    kk = B._check_vertex(k)
    n = B.n
    old = B.entries
    new = [list(row) for row in old]
    for i in range(n):
        for j in range(n):
            b = old[i][j]
            if i == kk or j == kk:
                s = b.sign()
                if (i == kk and s == 1) or (j == kk and s == -1):
                    new[i][j] = -b
                elif (i == kk and s == -1) or (j == kk and s == 1):
                    new[i][j] = -b.times_t()
            elif (old[i][kk] * old[kk][j]).sign() == 1:
                sik = old[i][kk].sign()
                term = (old[i][kk] * old[kk][j]).scale(sik)
                new[i][j] = (b + term).times_t()
    return GssMatrix(_as_entries(new), B.d)


def mutate_sequence(B: GssMatrix, seq: Iterable[int]) -> GssMatrix:
    for k in seq:
        B = mutate_matrix(B, k)
    return B


def positive_3cycle_ok(B: GssMatrix, k: int) -> bool:
    """Whether all composable products through k with an arrow back lie in Z.

    Equivalent to purity of the mutation at k; defined for pure matrices only.
    """
    violation = find_3cycle_violation(B, k)
    return violation is None


def find_3cycle_violation(B: GssMatrix, k: int) -> Optional[tuple[int, int, int]]:
    """First (i, j, k) triple violating the positive 3-cycle condition at k."""
    kk = B._check_vertex(k)
    if not B.is_pure():
        raise SemanticError("positive 3-cycle condition requires a pure matrix")
    ent = B.entries
    for i in range(B.n):
        for j in range(B.n):
            if i == kk or j == kk or i == j:
                continue
            if (ent[i][kk] * ent[kk][j]).sign() != 1:
                continue
            if not (ent[i][j] * ent[i][kk] * ent[kk][j]).is_int():
                return (i + 1, j + 1, k)
    return None
