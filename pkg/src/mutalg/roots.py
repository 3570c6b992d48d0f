"""Root systems of Cartan counterparts: reflection orbits, the inner product
M = D*C, mutation of roots, signed companion bases, and the recursive type-A
description used as an oracle.

A root is an integer coordinate vector over the formal simple basis; the
reflection convention is s_i(alpha_j) = alpha_j - c_ij alpha_i.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .cartan import CartanCounterpart, cartan_of_quiver
from .errors import BudgetExceededError, SemanticError
from .linalg import det_bareiss, identity, mat_mul, mat_vec
from .quiver import SignedValuedQuiver

Root = tuple[int, ...]

ROOT_CAP = 10**5


def simple_reflection(C: CartanCounterpart, i: int, beta: Sequence[int]) -> Root:
    """s_i(beta) = beta - (sum_j c_ij beta_j) alpha_i, 1-based i."""
    coeff = sum(C.c(i, j + 1) * beta[j] for j in range(C.n))
    out = list(beta)
    out[i - 1] -= coeff
    return tuple(out)


def reflection_matrix(C: CartanCounterpart, i: int) -> list[list[int]]:
    cols = []
    for j in range(1, C.n + 1):
        e = [0] * C.n
        e[j - 1] = 1
        cols.append(simple_reflection(C, i, e))
    return [[cols[j][r] for j in range(C.n)] for r in range(C.n)]


@dataclass(frozen=True, slots=True)
class RootSystemData:
    cartan: CartanCounterpart
    roots: tuple[Root, ...]  # sorted lexicographically

    @property
    def gram(self) -> tuple[tuple[int, ...], ...]:
        return self.cartan.gram()

    def inner(self, u: Sequence[int], v: Sequence[int]) -> int:
        M = self.gram
        n = self.cartan.n
        return sum(u[i] * M[i][j] * v[j] for i in range(n) for j in range(n))

    def pairing(self, beta: Sequence[int], gamma: Sequence[int]) -> Fraction:
        """(beta, gamma^vee) = 2 (beta, gamma) / (gamma, gamma)."""
        norm = self.inner(gamma, gamma)
        if norm == 0:
            raise SemanticError("coroot pairing against a zero-length vector")
        return Fraction(2 * self.inner(beta, gamma), norm)

    def contains(self, beta: Sequence[int]) -> bool:
        return tuple(beta) in set(self.roots)


def generate_root_system(
    C: CartanCounterpart, cap: int = ROOT_CAP
) -> RootSystemData:
    """Orbit of the formal simple roots under all simple reflections."""
    n = C.n
    simples = []
    for i in range(n):
        e = [0] * n
        e[i] = 1
        simples.append(tuple(e))
    seen: set[Root] = set(simples)
    frontier = list(simples)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(1, n + 1):
                img = simple_reflection(C, i, beta)
                if img not in seen:
                    if len(seen) >= cap:
                        raise BudgetExceededError(
                            "root orbit exceeded cap; input not mutation Dynkin?",
                            len(seen),
                        )
                    seen.add(img)
                    nxt.append(img)
        frontier = nxt
    return RootSystemData(C, tuple(sorted(seen)))


def check_root_system_axioms(RS: RootSystemData) -> None:
    """Reflection closure, integral pairings, R alpha intersection, and
    positive definiteness of the form; raises on the first failure."""
    from .cartan import is_positive_definite

    roots = set(RS.roots)
    if not roots:
        raise SemanticError("empty root set")
    n = RS.cartan.n
    if any(all(x == 0 for x in r) for r in roots):
        raise SemanticError("zero vector in root set")
    if not is_positive_definite(RS.gram):
        raise SemanticError("gram matrix is not positive definite")
    for beta in roots:
        if tuple(-x for x in beta) not in roots:
            raise SemanticError(f"root set not symmetric at {beta}")
        for i in range(1, n + 1):
            if simple_reflection(RS.cartan, i, beta) not in roots:
                raise SemanticError(f"not reflection closed at {beta}, s_{i}")
    for beta in roots:
        for gamma in roots:
            if RS.pairing(beta, gamma).denominator != 1:
                raise SemanticError(f"non-integral pairing ({beta},{gamma}v)")
    for beta in roots:
        for m in (2, 3):
            if tuple(m * x for x in beta) in roots:
                raise SemanticError(f"R alpha contains more than +-alpha: {beta}")


def root_mutation_matrix(Q: SignedValuedQuiver, k: int) -> list[list[int]]:
    """Matrix of rho_k: Phi' -> Phi in simple-root coordinates; column i is
    s_k(alpha_i) when i -> k in Q and alpha_i otherwise."""
    C = cartan_of_quiver(Q)
    n = Q.n
    into_k = {a.src for a in Q.arrows_into(k)}
    cols = []
    for i in range(1, n + 1):
        e = [0] * n
        e[i - 1] = 1
        cols.append(simple_reflection(C, k, e) if i in into_k else tuple(e))
    return [[cols[j][r] for j in range(n)] for r in range(n)]


def inverse_root_mutation_matrix(Qprime: SignedValuedQuiver, k: int) -> list[list[int]]:
    """Matrix of rho_k^{-1}: Phi -> Phi'; column j is s'_k(alpha'_j) when
    k -> j in Q' and alpha'_j otherwise."""
    Cp = cartan_of_quiver(Qprime)
    n = Qprime.n
    out_k = {a.tgt for a in Qprime.arrows_out_of(k)}
    cols = []
    for j in range(1, n + 1):
        e = [0] * n
        e[j - 1] = 1
        cols.append(simple_reflection(Cp, k, e) if j in out_k else tuple(e))
    return [[cols[j][r] for j in range(n)] for r in range(n)]


def mutate_root(Q: SignedValuedQuiver, k: int, beta: Sequence[int]) -> Root:
    return tuple(mat_vec(root_mutation_matrix(Q, k), list(beta)))


def composite_rho_matrix(
    t_quiver: SignedValuedQuiver, seq: Iterable[int]
) -> list[list[int]]:
    """Matrix of rho = rho_{k_1} ... rho_{k_l} for B = mu_{k_l}...mu_{k_1}(B_Delta):
    maps coordinates over the simple basis of the mutated system into
    coordinates over the Dynkin simple basis."""
    from .quiver import mutate_quiver

    mats = []
    cur = t_quiver
    for k in seq:
        mats.append(root_mutation_matrix(cur, k))
        cur = mutate_quiver(cur, k)
    out = identity(t_quiver.n)
    for m in mats:
        out = mat_mul(out, m)
    return out


def companion_images(
    t_quiver: SignedValuedQuiver, seq: Sequence[int]
) -> list[Root]:
    """Images of the current simple basis inside Phi_Delta under composite rho."""
    m = composite_rho_matrix(t_quiver, seq)
    n = t_quiver.n
    return [tuple(m[r][j] for r in range(n)) for j in range(n)]


def is_signed_companion_basis(
    gammas: Sequence[Sequence[int]],
    ambient: RootSystemData,
    C: CartanCounterpart,
) -> tuple[bool, str]:
    """Z-basis test (unimodular coordinate matrix) plus the Gram condition
    (gamma_j, gamma_i^vee) = c_ij against the ambient Dynkin inner product."""
    n = C.n
    mat = [[gammas[j][i] for j in range(n)] for i in range(n)]
    det = det_bareiss(mat)
    if det not in (1, -1):
        return False, f"coordinate matrix determinant {det} is not a unit"
    for i in range(n):
        for j in range(n):
            got = ambient.pairing(gammas[j], gammas[i])
            if got != C.entries[i][j]:
                return (
                    False,
                    f"Gram entry ({i + 1},{j + 1}) is {got}, expected "
                    f"{C.entries[i][j]}",
                )
    return True, "ok"


def _induced_subquiver(
    Q: SignedValuedQuiver, keep: Sequence[int]
) -> tuple[SignedValuedQuiver, dict[int, int]]:
    """Full subquiver on `keep`, relabelled 1..m; returns (quiver, old->new)."""
    mapping = {old: new for new, old in enumerate(sorted(keep), start=1)}
    arrows = [
        (mapping[a.src], mapping[a.tgt], a.v1, a.v2)
        for a in Q.arrows
        if a.src in mapping and a.tgt in mapping
    ]
    d = tuple(Q.d[old - 1] for old in sorted(keep))
    return SignedValuedQuiver.build(len(keep), arrows, d), mapping


def type_a_roots_recursive(Q: SignedValuedQuiver) -> set[Root]:
    """Root system of a mutation type A quiver by peeling extremal vertices.

    Shape (a): a degree-1 vertex v joined by a single edge of sign eps;
    Phi = Phi(rest) + {beta - eps m_w(beta) alpha_v} + {+-alpha_v} where w is
    the neighbour.  Shape (b): an oriented weight-1 3-cycle containing two
    degree-2 vertices v, w; Phi = Phi(drop v) + Phi(drop w) + {+-(alpha_w -
    eps alpha_v)} with eps the sign of the edge between w and v.
    """
    n = Q.n
    if any(a.weight != 1 for a in Q.arrows):
        raise SemanticError("type A quivers carry only weight-1 arrows")
    if n == 1:
        return {(1,), (-1,)}
    degree = {v: 0 for v in range(1, n + 1)}
    for a in Q.arrows:
        degree[a.src] += 1
        degree[a.tgt] += 1

    def embed(root: Root, mapping: dict[int, int]) -> Root:
        out = [0] * n
        for old, new in mapping.items():
            out[old - 1] = root[new - 1]
        return tuple(out)

    # shape (a): leaf vertex
    for v in sorted(degree, reverse=True):
        if degree[v] != 1:
            continue
        edge = next(a for a in Q.arrows if v in (a.src, a.tgt))
        eps = edge.sign
        w = edge.src if edge.tgt == v else edge.tgt
        rest = [u for u in range(1, n + 1) if u != v]
        sub, mapping = _induced_subquiver(Q, rest)
        sub_roots = type_a_roots_recursive(sub)
        phi = {embed(r, mapping) for r in sub_roots}
        out = set(phi)
        for beta in phi:
            img = list(beta)
            img[v - 1] = -eps * beta[w - 1]
            out.add(tuple(img))
        unit = [0] * n
        unit[v - 1] = 1
        out.add(tuple(unit))
        out.add(tuple(-x for x in unit))
        return out

    # shape (b): 3-cycle with two degree-2 vertices
    from .cycles import chordless_cycles
    from .quiver import matrix_from_quiver

    for cyc in chordless_cycles(matrix_from_quiver(Q)):
        if len(cyc.vertices) != 3:
            continue
        free = [u for u in cyc.vertices if degree[u] == 2]
        if len(free) < 2:
            continue
        v, w = sorted(free[:2], reverse=True)[0], sorted(free[:2], reverse=True)[1]
        edge = Q.arrow_between(v, w)
        if edge is None:
            continue
        eps = edge.sign
        sub_v, map_v = _induced_subquiver(Q, [u for u in range(1, n + 1) if u != v])
        sub_w, map_w = _induced_subquiver(Q, [u for u in range(1, n + 1) if u != w])
        out = {embed(r, map_v) for r in type_a_roots_recursive(sub_v)}
        out |= {embed(r, map_w) for r in type_a_roots_recursive(sub_w)}
        extra = [0] * n
        extra[w - 1] = 1
        extra[v - 1] = -eps
        out.add(tuple(extra))
        out.add(tuple(-x for x in extra))
        return out
    raise SemanticError("quiver does not peel as mutation type A")
