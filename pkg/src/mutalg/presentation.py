"""Serre-like presentations attached to Cartan counterparts, and the
mutation isomorphisms between them.

Relations are bracket words over the generators {h_i, e_{+i}, e_{-i}},
evaluated in a structure algebra under a choice of generator images; the
iterated bracket convention is [x_1, ..., x_m] = [x_1, [x_2, [..., x_m]]].
Presentations are verified through faithful images plus a dimension count
rather than by constructing the presented algebra.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .cartan import CartanCounterpart, cartan_of_quiver
from .chevalley import StructureAlgebra
from .errors import SemanticError
from .linalg import (
    SparseBasis,
    SparseVec,
    sparse_add,
    sparse_eq,
    sparse_scale,
)
from .quiver import SignedValuedQuiver
from .roots import Root, root_mutation_matrix
from .tring import sgn

# a generator token is ("h", i) or ("e", eps, i), 1-based i
Gen = tuple


def gen_h(i: int) -> Gen:
    return ("h", i)


def gen_e(i: int, eps: int = 1) -> Gen:
    return ("e", eps, i)


def gen_label(g: Gen) -> str:
    if g[0] == "h":
        return f"h{g[1]}"
    _, eps, i = g
    return f"e{i}" if eps == 1 else f"f{i}"


@dataclass(frozen=True, slots=True)
class Relation:
    """lhs bracket word minus a linear combination of generators, == 0."""

    label: str
    word: tuple[Gen, ...]
    rhs: tuple[tuple[Fraction, Gen], ...] = ()

    def render(self) -> str:
        lhs = "[" + ",".join(gen_label(g) for g in self.word) + "]"
        if not self.rhs:
            return f"{lhs} = 0"
        parts = []
        for coeff, g in self.rhs:
            parts.append(f"{coeff}*{gen_label(g)}")
        return f"{lhs} = " + " + ".join(parts)


RelationSet = list[Relation]


@dataclass(frozen=True)
class GeneratorImages:
    """Images of h_i, e_i, f_i inside a structure algebra."""

    n: int
    h: tuple[SparseVec, ...]
    e_plus: tuple[SparseVec, ...]
    e_minus: tuple[SparseVec, ...]

    def image(self, g: Gen) -> SparseVec:
        if g[0] == "h":
            return self.h[g[1] - 1]
        _, eps, i = g
        return self.e_plus[i - 1] if eps == 1 else self.e_minus[i - 1]

    def all_images(self) -> list[SparseVec]:
        return list(self.h) + list(self.e_plus) + list(self.e_minus)


def standard_images(alg: StructureAlgebra) -> GeneratorImages:
    n = alg.n
    return GeneratorImages(
        n,
        tuple(alg.h(i) for i in range(1, n + 1)),
        tuple(alg.e(i) for i in range(1, n + 1)),
        tuple(alg.e(i, -1) for i in range(1, n + 1)),
    )


def bracket_word(
    alg: StructureAlgebra, images: GeneratorImages, word: Sequence[Gen]
) -> SparseVec:
    """Right-nested iterated bracket of generator images."""
    out = images.image(word[-1])
    for g in reversed(word[:-1]):
        out = alg.bracket(images.image(g), out)
    return out


def ad_power(alg: StructureAlgebra, x: SparseVec, m: int, y: SparseVec) -> SparseVec:
    for _ in range(m):
        y = alg.bracket(x, y)
    return y


def relations_r1_r4(C: CartanCounterpart) -> RelationSet:
    """(R1) commuting Cartan part, (R2) [e_i, f_i] = h_i, (R3) weights,
    (R4) (ad e_{eps i})^{1-M}(e_{delta j}) = 0 with M = min(0, eps delta c_ij)."""
    n = C.n
    rels: RelationSet = []
    one = Fraction(1)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            rels.append(Relation(f"R1[{i},{j}]", (gen_h(i), gen_h(j))))
    for i in range(1, n + 1):
        rels.append(
            Relation(f"R2[{i}]", (gen_e(i, 1), gen_e(i, -1)), ((one, gen_h(i)),))
        )
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            for eps in (1, -1):
                coeff = Fraction(eps * C.c(i, j))
                rhs = ((coeff, gen_e(j, eps)),) if coeff else ()
                rels.append(
                    Relation(f"R3[{i},{j},{eps:+d}]", (gen_h(i), gen_e(j, eps)), rhs)
                )
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            for eps in (1, -1):
                for delta in (1, -1):
                    M = min(0, eps * delta * C.c(i, j))
                    word = tuple([gen_e(i, eps)] * (1 - M) + [gen_e(j, delta)])
                    rels.append(
                        Relation(f"R4[{i},{j},{eps:+d},{delta:+d}]", word)
                    )
    return rels


def cycle_weights(C: CartanCounterpart, verts: Sequence[int]) -> list[int]:
    p = len(verts)
    return [
        abs(C.c(verts[a], verts[(a + 1) % p]) * C.c(verts[(a + 1) % p], verts[a]))
        for a in range(p)
    ]


def long_vertices(C: CartanCounterpart, verts: Sequence[int]) -> set[int]:
    """Cycle vertices sitting at the bigger end of a double edge, i.e. with
    |c_vw| = 2 toward a cycle neighbour.  These are the long vertices of the
    cycle; within each double edge the bigger end carries the smaller
    symmetrizer entry."""
    p = len(verts)
    longs = set()
    for a in range(p):
        v = verts[a]
        for w in (verts[a - 1], verts[(a + 1) % p]):
            if abs(C.c(v, w)) == 2:
                longs.add(v)
    return longs


def classify_cycle_shape(C: CartanCounterpart, verts: Sequence[int]) -> str:
    """One of "simply-laced", "B3-cycle", "C3-cycle", "F4-cycle"."""
    weights = cycle_weights(C, verts)
    p = len(verts)
    if all(w == 1 for w in weights):
        return "simply-laced"
    if p == 3 and sorted(weights) == [1, 2, 2]:
        longs = long_vertices(C, verts)
        if len(longs) == 2:
            return "B3-cycle"
        if len(longs) == 1:
            return "C3-cycle"
        raise SemanticError(f"unrecognized 3-cycle shape on {tuple(verts)}")
    if p == 4 and sorted(weights) == [1, 1, 2, 2]:
        idx2 = [a for a, w in enumerate(weights) if w == 2]
        if (idx2[1] - idx2[0]) % 2 == 0 and len(long_vertices(C, verts)) == 2:
            return "F4-cycle"
    raise SemanticError(f"unrecognized cycle shape on {tuple(verts)}")


def _dihedral_paths(verts: Sequence[int]) -> list[tuple[int, ...]]:
    """All rotations of the cycle in both directions (the dihedral orbit of
    the vertex sequence)."""
    p = len(verts)
    seqs = []
    forward = list(verts)
    backward = list(reversed(verts))
    for base in (forward, backward):
        for shift in range(p):
            seqs.append(tuple(base[shift:] + base[:shift]))
    return seqs


def sign_chain(C: CartanCounterpart, path: Sequence[int], eps1: int) -> list[int]:
    """Signs eps_{q+1} = -sgn(c_{i_q, i_{q+1}}) eps_q along a vertex path."""
    signs = [eps1]
    for a in range(len(path) - 1):
        signs.append(-sgn(C.c(path[a], path[a + 1])) * signs[-1])
    return signs


def r5_words_for_cycle(
    C: CartanCounterpart, verts: Sequence[int], excluded: bool = False
) -> list[tuple[str, tuple[Gen, ...]]]:
    """Sign-chained (R5) bracket words for one chordless cycle.

    excluded=False yields the imposed relations (skipping paths that start
    and end at long vertices of B3/F4 cycles); excluded=True yields exactly
    the skipped words, whose images must stay nonzero.
    """
    shape = classify_cycle_shape(C, verts)
    longs = long_vertices(C, verts) if shape in ("B3-cycle", "F4-cycle") else set()
    out = []
    for path in _dihedral_paths(verts):
        skip = bool(longs) and {path[0], path[-1]} == longs
        if skip != excluded:
            continue
        for eps1 in (1, -1):
            signs = sign_chain(C, path, eps1)
            word = tuple(gen_e(v, s) for v, s in zip(path, signs))
            tag = "X5" if excluded else "R5"
            label = f"{tag}[{','.join(map(str, path))};{eps1:+d}]"
            out.append((label, word))
    return out


def relations_r5(
    C: CartanCounterpart, cycles: Iterable[Sequence[int]]
) -> RelationSet:
    rels: RelationSet = []
    for verts in cycles:
        for label, word in r5_words_for_cycle(C, verts, excluded=False):
            rels.append(Relation(label, word))
    return rels


def chordless_cycles_of_cartan(C: CartanCounterpart) -> list[tuple[int, ...]]:
    """Chordless cycles of the support graph of C (same support as the
    underlying gss matrix)."""
    from .cycles import chordless_cycles
    from .gss import GssMatrix
    from .tring import TElem

    n = C.n
    rows = [[TElem(0, 0) for _ in range(n)] for _ in range(n)]
    # only the support matters; orient each edge low -> high
    for i in range(n):
        for j in range(i + 1, n):
            if C.entries[i][j]:
                rows[i][j] = TElem(0, abs(C.entries[i][j]))
                rows[j][i] = TElem(0, -abs(C.entries[j][i]))
    B = GssMatrix.from_entries(rows, C.d)
    return [c.vertices for c in chordless_cycles(B)]


def all_relations(C: CartanCounterpart) -> RelationSet:
    return relations_r1_r4(C) + relations_r5(C, chordless_cycles_of_cartan(C))


@dataclass(frozen=True, slots=True)
class RelationFailure:
    relation: str
    residual: SparseVec


@dataclass(frozen=True, slots=True)
class VerificationReport:
    relations_checked: int
    failures: tuple[RelationFailure, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_homomorphism(
    alg: StructureAlgebra, images: GeneratorImages, rels: RelationSet
) -> VerificationReport:
    """Evaluate every relation under the images; failures carry residuals."""
    failures = []
    for rel in rels:
        val = bracket_word(alg, images, rel.word)
        for coeff, g in rel.rhs:
            val = sparse_add(val, sparse_scale(images.image(g), -coeff))
        if val:
            failures.append(RelationFailure(rel.label, val))
    return VerificationReport(len(rels), tuple(failures))


def verify_isomorphism(
    alg: StructureAlgebra, images: GeneratorImages
) -> tuple[bool, int]:
    """Bracket-closure rank of the image span; an image of full dimension
    inside a simple algebra certifies an isomorphism."""
    gens = images.all_images()
    basis = SparseBasis()
    frontier = []
    for g in gens:
        if basis.insert(g):
            frontier.append(g)
    while frontier:
        new_frontier = []
        for v in frontier:
            for g in gens:
                w = alg.bracket(g, v)
                if w and basis.insert(w):
                    new_frontier.append(w)
        frontier = new_frontier
    return basis.rank == alg.dim, basis.rank


def phi_k(
    Q: SignedValuedQuiver,
    k: int,
    images: GeneratorImages,
    alg: StructureAlgebra,
) -> GeneratorImages:
    """Images of the generators of g(mu_k(Q)) given images of g(Q):
    e'_{eps i} = (-eps)^{c_ki} / |c_ki|! ad^{|c_ki|}(e_{-delta eps k})(e_{eps i})
    for an arrow i -> k of sign delta, h'_i = h_i - c_ik h_k."""
    C = cartan_of_quiver(Q)
    n = Q.n
    arrows_in = {a.src: a.sign for a in Q.arrows_into(k)}
    new_h = list(images.h)
    new_ep = list(images.e_plus)
    new_em = list(images.e_minus)
    for i, delta in arrows_in.items():
        cki = C.c(k, i)
        m = abs(cki)
        for eps, store in ((1, new_ep), (-1, new_em)):
            coeff = Fraction((-eps) ** m, _factorial(m))
            base = images.e_plus[k - 1] if -delta * eps == 1 else images.e_minus[k - 1]
            val = ad_power(alg, base, m, store[i - 1])
            store[i - 1] = sparse_scale(val, coeff)
        new_h[i - 1] = sparse_add(
            images.h[i - 1], sparse_scale(images.h[k - 1], -C.c(i, k))
        )
    return GeneratorImages(n, tuple(new_h), tuple(new_ep), tuple(new_em))


def psi_k(
    Q: SignedValuedQuiver,
    k: int,
    images_prime: GeneratorImages,
    alg: StructureAlgebra,
) -> GeneratorImages:
    """Inverse direction: images of g(Q) generators given images of
    g(mu_k(Q)): e_{eps i} = (-eps)^{c_ki}/|c_ki|! ad^{|c_ki|}(e'_{delta eps k})
    (e'_{eps i}), h_i = h'_i + c_ik h'_k; C is the Cartan counterpart of Q."""
    C = cartan_of_quiver(Q)
    n = Q.n
    arrows_in = {a.src: a.sign for a in Q.arrows_into(k)}
    new_h = list(images_prime.h)
    new_ep = list(images_prime.e_plus)
    new_em = list(images_prime.e_minus)
    for i, delta in arrows_in.items():
        cki = C.c(k, i)
        m = abs(cki)
        for eps, store in ((1, new_ep), (-1, new_em)):
            coeff = Fraction((-eps) ** m, _factorial(m))
            base = (
                images_prime.e_plus[k - 1]
                if delta * eps == 1
                else images_prime.e_minus[k - 1]
            )
            val = ad_power(alg, base, m, store[i - 1])
            store[i - 1] = sparse_scale(val, coeff)
        new_h[i - 1] = sparse_add(
            images_prime.h[i - 1], sparse_scale(images_prime.h[k - 1], C.c(i, k))
        )
    return GeneratorImages(n, tuple(new_h), tuple(new_ep), tuple(new_em))


def _factorial(m: int) -> int:
    out = 1
    for x in range(2, m + 1):
        out *= x
    return out


@dataclass
class MutationTrail:
    """Incremental state while mutating away from a Dynkin seed: the current
    quiver, generator images in g(Delta), and the composite root-mutation
    matrix mapping current simple-root coordinates into Phi_Delta."""

    alg: StructureAlgebra
    quiver: SignedValuedQuiver
    images: GeneratorImages
    rho: list[list[int]]
    history: list[int] = field(default_factory=list)

    def cartan(self) -> CartanCounterpart:
        return cartan_of_quiver(self.quiver)

    def step(self, k: int) -> "MutationTrail":
        from .linalg import mat_mul
        from .quiver import mutate_quiver

        new_images = phi_k(self.quiver, k, self.images, self.alg)
        rho_step = root_mutation_matrix(self.quiver, k)
        return MutationTrail(
            self.alg,
            mutate_quiver(self.quiver, k),
            new_images,
            mat_mul(self.rho, rho_step),
            self.history + [k],
        )


def start_trail(t) -> MutationTrail:
    from .cartan import dynkin_quiver
    from .chevalley import chevalley_algebra
    from .linalg import identity

    alg = chevalley_algebra(t)
    Q = dynkin_quiver(t)
    return MutationTrail(alg, Q, standard_images(alg), identity(Q.n))


def beta_of_h(C: CartanCounterpart, beta: Sequence[int], i: int) -> int:
    """beta(h_i) by linear extension of alpha_j(h_i) = c_ij."""
    return sum(C.c(i, j + 1) * beta[j] for j in range(C.n))


def root_space(
    alg: StructureAlgebra,
    h_images: Sequence[SparseVec],
    eigenvalues: Sequence[int],
) -> list[SparseVec]:
    """Simultaneous eigenspace {x : [h_img_i, x] = lambda_i x}.

    When every h image lies in the Cartan span the x_gamma basis vectors are
    joint eigenvectors and a weight scan suffices; otherwise a dense
    nullspace computation over Q is used.
    """
    n = alg.n
    in_cartan = all(all(idx < n for idx in h) for h in h_images)
    if in_cartan:
        out = []
        for pos, gamma in enumerate(alg.basis_roots):
            ok = True
            for h, lam in zip(h_images, eigenvalues):
                ev = sum(
                    coeff * _weight_pairing(alg, gamma, idx)
                    for idx, coeff in h.items()
                )
                if ev != lam:
                    ok = False
                    break
            if ok:
                out.append({n + pos: Fraction(1)})
        if all(lam == 0 for lam in eigenvalues):
            for i in range(n):
                out.append({i: Fraction(1)})
        return out
    # dense fallback: stack (ad h - lambda I) over all h images
    from .linalg import nullspace

    for a in range(len(h_images)):
        for b in range(a + 1, len(h_images)):
            if alg.bracket(h_images[a], h_images[b]):
                raise SemanticError(
                    f"h images {a + 1} and {b + 1} do not commute"
                )
    dim = alg.dim
    rows = []
    for h, lam in zip(h_images, eigenvalues):
        cols = []
        for j in range(dim):
            col = alg.bracket(h, {j: Fraction(1)})
            cols.append(col)
        for r in range(dim):
            rows.append(
                [
                    cols[j].get(r, Fraction(0)) - (lam if r == j else 0)
                    for j in range(dim)
                ]
            )
    return [
        {i: c for i, c in enumerate(vec) if c} for vec in nullspace(rows)
    ]


def _weight_pairing(alg: StructureAlgebra, gamma: Root, h_idx: int) -> Fraction:
    """(gamma, alpha_{h_idx+1}^vee): eigenvalue of ad h on x_gamma."""
    bracket = alg.bracket_basis(h_idx, alg.n + alg.root_index[gamma])
    if not bracket:
        return Fraction(0)
    return bracket[alg.n + alg.root_index[gamma]]


def verify_rootspace_mutation(
    trail: MutationTrail, k: int
) -> list[tuple[Root, Root]]:
    """Check phi_k(g'^{beta'}) = g^{rho_k(beta')} for every root beta' of the
    mutated presentation; returns the list of (beta', rho_k(beta')) pairs.

    Both spaces are located inside g(Delta): the beta'-eigenspace of the
    post-step h images must coincide with the rho_k(beta')-eigenspace of the
    pre-step h images.
    """
    from .linalg import mat_vec
    from .roots import generate_root_system

    after = trail.step(k)
    C_prime = after.cartan()
    C = trail.cartan()
    phi_prime = generate_root_system(C_prime)
    rho_step = root_mutation_matrix(trail.quiver, k)
    checked = []
    for beta_p in phi_prime.roots:
        lam_prime = [beta_of_h(C_prime, beta_p, i) for i in range(1, C.n + 1)]
        space_prime = root_space(after.alg, after.images.h, lam_prime)
        image_root = tuple(mat_vec(rho_step, list(beta_p)))
        lam = [beta_of_h(C, image_root, i) for i in range(1, C.n + 1)]
        space = root_space(trail.alg, trail.images.h, lam)
        if len(space_prime) != 1 or len(space) != 1:
            raise SemanticError(
                f"root spaces not 1-dimensional at {beta_p}: "
                f"{len(space_prime)} vs {len(space)}"
            )
        if not _same_line(space_prime[0], space[0]):
            raise SemanticError(
                f"root space mismatch: beta'={beta_p} maps to {image_root}"
            )
        checked.append((beta_p, image_root))
    return checked


def _same_line(u: SparseVec, v: SparseVec) -> bool:
    from .linalg import sparse_proportional

    return sparse_proportional(u, v)


def verify_sequence(
    t,
    seq: Sequence[int],
    check_rootspaces: bool = True,
    check_inverse: bool = True,
    experimental_r5: bool = False,
) -> dict:
    """Drive a mutation sequence from the canonical Dynkin seed and verify
    the presentation machinery at each step; returns a JSON-ready report."""
    trail = start_trail(t)
    rootspace_pairs = 0
    for k in seq:
        if check_rootspaces:
            rootspace_pairs += len(verify_rootspace_mutation(trail, k))
        stepped = trail.step(k)
        if check_inverse:
            back = psi_k(trail.quiver, k, stepped.images, trail.alg)
            for a, b in zip(back.all_images(), trail.images.all_images()):
                if not sparse_eq(a, b):
                    raise SemanticError(f"phi_{k} and psi_{k} are not inverse")
        trail = stepped
    rels = all_relations(trail.cartan())
    rep = verify_homomorphism(trail.alg, trail.images, rels)
    iso, rank = verify_isomorphism(trail.alg, trail.images)
    failures = [
        (f.relation, [f.residual.get(i, Fraction(0)) for i in range(trail.alg.dim)])
        for f in rep.failures
    ]
    from .serialize import report_to_json

    report = report_to_json(rep.relations_checked, failures, rank, iso and rep.ok)
    out = {
        "type": str(t),
        "sequence": list(seq),
        "report": report,
        "expected_dimension": trail.alg.dim,
        "rootspace_pairs_checked": rootspace_pairs,
    }
    if experimental_r5:
        out["experimental_r5"] = r5_vanishing_profile(
            trail.alg, trail.images, trail.cartan()
        )
    return out


def excluded_words_nonzero(
    alg: StructureAlgebra,
    images: GeneratorImages,
    C: CartanCounterpart,
    verts: Sequence[int],
) -> list[tuple[str, bool]]:
    """Evaluate the excluded long-to-long words of a B3/F4 cycle; each must
    be nonzero in a faithful image (imposing them collapses the algebra)."""
    out = []
    for label, word in r5_words_for_cycle(C, verts, excluded=True):
        val = bracket_word(alg, images, word)
        out.append((label, bool(val)))
    return out


def r5_vanishing_profile(
    alg: StructureAlgebra, images: GeneratorImages, C: CartanCounterpart
) -> list[dict]:
    """Experimental report: evaluate the full dihedral family of sign-chained
    cycle words (imposed and excluded alike) under the images and record
    which vanish.  Informational only; nothing here is asserted."""
    profile = []
    for verts in chordless_cycles_of_cartan(C):
        entry = {
            "cycle": list(verts),
            "shape": classify_cycle_shape(C, verts),
            "vanishing": [],
            "nonvanishing": [],
        }
        for excluded in (False, True):
            for label, word in r5_words_for_cycle(C, verts, excluded=excluded):
                key = "vanishing" if not bracket_word(alg, images, word) else "nonvanishing"
                entry[key].append(label)
        profile.append(entry)
    return profile
