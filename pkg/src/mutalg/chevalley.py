"""Simple Lie algebras by integer structure constants on a Chevalley basis.

The basis is h_1..h_n followed by one vector x_gamma per root, positive
roots first in height-then-lex order.  Constants N(alpha, beta) are fixed by
the extraspecial-pair normalization: for each non-simple positive gamma the
minimal alpha with gamma - alpha positive gets N(alpha, gamma - alpha) =
p + 1 > 0, and every other constant follows from the Jacobi and reflection
identities.  Construction self-checks antisymmetry, Jacobi (exhaustive for
rank <= 4, sampled otherwise), and the Serre relations of the canonical
generators.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from .cartan import CartanCounterpart, classical_cartan
from .diagram import DynkinType
from .errors import SemanticError
from .linalg import SparseVec, sparse_add, sparse_scale
from .roots import Root, RootSystemData, generate_root_system

JACOBI_SAMPLES = 10_000


def _height(r: Root) -> int:
    return sum(r)


def _neg(r: Root) -> Root:
    return tuple(-x for x in r)


@dataclass(frozen=True)
class StructureAlgebra:
    """Finite-dimensional simple Lie algebra with labelled Chevalley basis."""

    dynkin: DynkinType
    cartan: CartanCounterpart
    roots: RootSystemData
    basis_roots: tuple[Root, ...]  # positions n..dim-1
    root_index: dict[Root, int] = field(repr=False)
    table: dict[tuple[int, int], SparseVec] = field(repr=False)

    @property
    def n(self) -> int:
        return self.cartan.n

    @property
    def dim(self) -> int:
        return self.n + len(self.basis_roots)

    def basis_label(self, idx: int) -> str:
        if idx < self.n:
            return f"h{idx + 1}"
        return "x[" + ",".join(str(c) for c in self.basis_roots[idx - self.n]) + "]"

    def bracket_basis(self, i: int, j: int) -> SparseVec:
        if i == j:
            return {}
        if (i, j) in self.table:
            return self.table[(i, j)]
        if (j, i) in self.table:
            return sparse_scale(self.table[(j, i)], -1)
        return {}

    def bracket(self, u: SparseVec, v: SparseVec) -> SparseVec:
        out: SparseVec = {}
        for i, ci in u.items():
            for j, cj in v.items():
                term = self.bracket_basis(i, j)
                if term:
                    out = sparse_add(out, sparse_scale(term, ci * cj))
        return out

    def h(self, i: int) -> SparseVec:
        """Cartan generator h_i, 1-based."""
        return {i - 1: Fraction(1)}

    def root_vector(self, gamma: Sequence[int]) -> SparseVec:
        return {self.n + self.root_index[tuple(gamma)]: Fraction(1)}

    def e(self, i: int, eps: int = 1) -> SparseVec:
        """Generator e_{eps i}: the root vector of eps * alpha_i."""
        unit = [0] * self.n
        unit[i - 1] = eps
        return self.root_vector(unit)

    def weight(self, idx: int) -> Optional[Root]:
        """Root of a basis vector; None on the Cartan part."""
        return None if idx < self.n else self.basis_roots[idx - self.n]


def _structure_constants(C: CartanCounterpart, RS: RootSystemData):
    n = C.n
    roots = set(RS.roots)
    positives = sorted(
        (r for r in roots if _height(r) > 0), key=lambda r: (_height(r), r)
    )
    if 2 * len(positives) != len(roots):
        raise SemanticError("root system is not split into +-; bad Cartan input")
    pos_set = set(positives)
    simples = [r for r in positives if _height(r) == 1]
    if len(simples) != n:
        raise SemanticError("expected exactly n simple roots of height 1")

    gram = RS.gram

    def inner(u: Root, v: Root) -> int:
        return sum(u[i] * gram[i][j] * v[j] for i in range(n) for j in range(n))

    def chain_p(alpha: Root, beta: Root) -> int:
        p = 0
        cur = tuple(b - a for a, b in zip(alpha, beta))
        while cur in roots:
            p += 1
            cur = tuple(c - a for a, c in zip(alpha, cur))
        return p

    order = {r: k for k, r in enumerate(positives)}
    extraspecial: dict[Root, tuple[Root, Root]] = {}
    for gamma in positives:
        if _height(gamma) == 1:
            continue
        for alpha in positives:
            rem = tuple(g - a for g, a in zip(gamma, alpha))
            if rem in pos_set:
                extraspecial[gamma] = (alpha, rem)
                break
        else:
            raise SemanticError(f"no special pair sums to {gamma}")

    memo: dict[tuple[Root, Root], int] = {}

    def N(a: Root, b: Root) -> int:
        s = tuple(x + y for x, y in zip(a, b))
        if s not in roots:
            raise SemanticError("N called on a non-root sum")
        key = (a, b)
        if key in memo:
            return memo[key]
        a_pos, b_pos = a in pos_set, b in pos_set
        if a_pos and b_pos:
            if order[a] > order[b]:
                val = -N(b, a)
            else:
                alpha1, beta1 = extraspecial[s]
                if (a, b) == (alpha1, beta1):
                    val = chain_p(a, b) + 1
                else:
                    # Jacobi identity on (x_{-alpha1}, x_a, x_b)
                    t1 = 0
                    bm = tuple(x - y for x, y in zip(b, alpha1))
                    if bm in roots:
                        t1 = N(b, _neg(alpha1)) * N(a, bm)
                    t2 = 0
                    am = tuple(x - y for x, y in zip(a, alpha1))
                    if am in roots:
                        t2 = N(_neg(alpha1), a) * N(b, am)
                    denom = N(_neg(alpha1), s)
                    num = -(t1 + t2)
                    if denom == 0 or num % denom:
                        raise SemanticError("special-pair recursion failed")
                    val = num // denom
        elif not a_pos and not b_pos:
            val = -N(_neg(a), _neg(b))
        elif not a_pos:
            val = -N(b, a)
        else:
            # a positive, b negative
            c = s
            if c in pos_set:
                ratio = Fraction(inner(c, c), inner(a, a))
                val = -ratio * N(_neg(b), c)
            else:
                ratio = Fraction(inner(c, c), inner(b, b))
                val = ratio * N(_neg(c), a)
            if val.denominator != 1:
                raise SemanticError("non-integral structure constant")
            val = int(val)
        memo[key] = val
        return val

    def coroot_h(gamma: Root) -> SparseVec:
        d_gamma = Fraction(inner(gamma, gamma), 2)
        out: SparseVec = {}
        for i in range(n):
            coeff = Fraction(gamma[i] * C.d[i]) / d_gamma
            if coeff.denominator != 1:
                raise SemanticError("coroot leaves the coroot lattice")
            if coeff:
                out[i] = coeff
        return out

    basis_roots = tuple(positives + [_neg(r) for r in positives])
    root_index = {r: k for k, r in enumerate(basis_roots)}
    table: dict[tuple[int, int], SparseVec] = {}

    for i in range(n):
        alpha_i_unit = [0] * n
        alpha_i_unit[i] = 1
        alpha_i = tuple(alpha_i_unit)
        norm_i = inner(alpha_i, alpha_i)
        for k, gamma in enumerate(basis_roots):
            ev = Fraction(2 * inner(gamma, alpha_i), norm_i)
            if ev.denominator != 1:
                raise SemanticError("non-integral weight")
            if ev:
                table[(i, n + k)] = {n + k: ev}
    for k1, g1 in enumerate(basis_roots):
        for k2, g2 in enumerate(basis_roots):
            if k1 >= k2:
                continue
            s = tuple(x + y for x, y in zip(g1, g2))
            if all(x == 0 for x in s):
                table[(n + k1, n + k2)] = coroot_h(g1)
            elif s in roots:
                coeff = N(g1, g2)
                if coeff:
                    table[(n + k1, n + k2)] = {
                        n + root_index[s]: Fraction(coeff)
                    }
    return basis_roots, root_index, table


def _selfcheck(alg: StructureAlgebra) -> None:
    dim = alg.dim
    n = alg.n
    basis = [{i: Fraction(1)} for i in range(dim)]

    def jacobi(i: int, j: int, k: int) -> None:
        a = alg.bracket(alg.bracket_basis(i, j), basis[k])
        b = alg.bracket(alg.bracket_basis(j, k), basis[i])
        c = alg.bracket(alg.bracket_basis(k, i), basis[j])
        total = sparse_add(sparse_add(a, b), c)
        if total:
            raise SemanticError(
                f"Jacobi fails on basis triple ({alg.basis_label(i)}, "
                f"{alg.basis_label(j)}, {alg.basis_label(k)})"
            )

    if alg.n <= 4:
        for i in range(dim):
            for j in range(i + 1, dim):
                for k in range(j + 1, dim):
                    jacobi(i, j, k)
    else:
        rng = random.Random(2024)
        for _ in range(JACOBI_SAMPLES):
            i, j, k = (rng.randrange(dim) for _ in range(3))
            if len({i, j, k}) == 3:
                jacobi(i, j, k)

    # Serre relations of the canonical generators
    C = alg.cartan
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            cij = C.c(i, j)
            ad_e = alg.e(j)
            ad_f = alg.e(j, -1)
            for _ in range(1 - cij):
                ad_e = alg.bracket(alg.e(i), ad_e)
                ad_f = alg.bracket(alg.e(i, -1), ad_f)
            if ad_e or ad_f:
                raise SemanticError(f"Serre relation fails at ({i},{j})")
            if alg.bracket(alg.e(i), alg.e(j, -1)):
                raise SemanticError(f"[e_{i}, f_{j}] should vanish")
        if alg.bracket(alg.e(i), alg.e(i, -1)) != alg.h(i):
            raise SemanticError(f"[e_{i}, f_{i}] != h_{i}")


@lru_cache(maxsize=None)
def chevalley_algebra(t: DynkinType) -> StructureAlgebra:
    """The simple Lie algebra of a Dynkin type, rank <= 8."""
    if t.rank > 8:
        raise SemanticError("rank must be at most 8")
    C = classical_cartan(t)
    RS = generate_root_system(C)
    basis_roots, root_index, table = _structure_constants(C, RS)
    alg = StructureAlgebra(t, C, RS, basis_roots, root_index, table)
    _selfcheck(alg)
    return alg
