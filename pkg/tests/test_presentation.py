from __future__ import annotations

import random
from fractions import Fraction

from mutalg.cartan import cartan_of_quiver, classical_cartan, dynkin_quiver
from mutalg.chevalley import chevalley_algebra
from mutalg.classes import class_of_type
from mutalg.diagram import DynkinType
from mutalg.linalg import sparse_add, sparse_eq, sparse_scale
from mutalg.presentation import (
    GeneratorImages,
    all_relations,
    bracket_word,
    beta_of_h,
    chordless_cycles_of_cartan,
    classify_cycle_shape,
    excluded_words_nonzero,
    gen_e,
    gen_h,
    long_vertices,
    psi_k,
    r5_words_for_cycle,
    relations_r1_r4,
    relations_r5,
    root_space,
    sign_chain,
    standard_images,
    start_trail,
    verify_homomorphism,
    verify_isomorphism,
    verify_rootspace_mutation,
    verify_sequence,
)
from mutalg.quiver import mutate_quiver


def words_of(rels):
    return {tuple(r.word) for r in rels}


def test_r4_for_classical_a3():
    C = classical_cartan(DynkinType.parse("A3"))
    words = words_of(relations_r1_r4(C))
    assert (gen_e(1), gen_e(1), gen_e(2)) in words       # (ad e1)^2 e2
    assert (gen_e(1), gen_e(2, -1)) in words             # [e1, f2]
    assert (gen_e(1), gen_e(3)) in words                 # commuting pair
    assert (gen_e(1), gen_e(1), gen_e(3)) not in words


def test_r4_for_mutated_a3():
    Q = mutate_quiver(dynkin_quiver(DynkinType.parse("A3")), 2)
    words = words_of(relations_r1_r4(cartan_of_quiver(Q)))
    assert (gen_e(2), gen_e(3)) in words                 # c'_23 = +1
    assert (gen_e(2), gen_e(2), gen_e(3, -1)) in words   # [e2, e2, f3]


def test_r4_zero_pair_is_degree_one_both_ways():
    C = classical_cartan(DynkinType.parse("A3"))
    words = words_of(relations_r1_r4(C))
    assert (gen_e(1), gen_e(3)) in words and (gen_e(1), gen_e(3, -1)) in words


def test_r5_for_mutated_a3_matches_worked_example():
    Q = mutate_quiver(dynkin_quiver(DynkinType.parse("A3")), 2)
    C = cartan_of_quiver(Q)
    rels = relations_r5(C, chordless_cycles_of_cartan(C))
    assert len(rels) == 12
    words = words_of(rels)
    assert (gen_e(1), gen_e(2), gen_e(3, -1)) in words   # [e1, e2, f3]
    assert (gen_e(2), gen_e(3, -1), gen_e(1, -1)) in words
    assert (gen_e(3), gen_e(1), gen_e(2)) in words


def test_r5_empty_for_trees():
    C = classical_cartan(DynkinType.parse("D4"))
    assert relations_r5(C, chordless_cycles_of_cartan(C)) == []


def test_sign_chain_rule():
    Q = mutate_quiver(dynkin_quiver(DynkinType.parse("A3")), 2)
    C = cartan_of_quiver(Q)
    assert sign_chain(C, (1, 2, 3), 1) == [1, 1, -1]
    assert sign_chain(C, (2, 3, 1), 1) == [1, -1, -1]


def test_seed_relations_hold_in_chevalley_basis():
    for name in ("A3", "B3", "C3", "G2"):
        alg = chevalley_algebra(DynkinType.parse(name))
        rep = verify_homomorphism(
            alg, standard_images(alg), all_relations(alg.cartan)
        )
        assert rep.ok


def test_worked_a3_example_end_to_end():
    trail = start_trail(DynkinType.parse("A3"))
    t2 = trail.step(2)
    alg = trail.alg
    img = t2.images
    assert sparse_eq(img.h[2], sparse_add(alg.h(2), alg.h(3)))
    assert sparse_eq(img.e_plus[2], sparse_scale(alg.bracket(alg.e(2), alg.e(3)), -1))
    assert sparse_eq(img.e_minus[2], alg.bracket(alg.e(2, -1), alg.e(3, -1)))
    rep = verify_homomorphism(alg, img, all_relations(t2.cartan()))
    assert rep.ok
    iso, rank = verify_isomorphism(alg, img)
    assert iso and rank == 15


def test_sign_flipped_image_fails_r2_only():
    # negating one root-vector image rescales every zero-target word, so the
    # only relation that can notice is [e3', f3'] = h3'
    trail = start_trail(DynkinType.parse("A3"))
    t2 = trail.step(2)
    alg = trail.alg
    img = t2.images
    bad = GeneratorImages(
        3,
        img.h,
        (img.e_plus[0], img.e_plus[1], sparse_scale(img.e_plus[2], -1)),
        img.e_minus,
    )
    rep = verify_homomorphism(alg, bad, all_relations(t2.cartan()))
    assert not rep.ok
    assert [f.relation for f in rep.failures] == ["R2[3]"]
    assert all(f.residual for f in rep.failures)


def test_corrupted_image_fails_r5():
    # keeping the uncomposed e3 as the image of e3' leaves a nonzero residual
    # on the cycle relation [e3', e1', e2'] (and on some (R4) words)
    trail = start_trail(DynkinType.parse("A3"))
    t2 = trail.step(2)
    alg = trail.alg
    img = t2.images
    bad = GeneratorImages(
        3,
        img.h,
        (img.e_plus[0], img.e_plus[1], alg.e(3)),
        img.e_minus,
    )
    rep = verify_homomorphism(alg, bad, all_relations(t2.cartan()))
    assert not rep.ok
    r5_failures = [f for f in rep.failures if f.relation.startswith("R5")]
    assert r5_failures
    assert all(f.residual for f in rep.failures)


def test_untouched_vertices_keep_their_images():
    trail = start_trail(DynkinType.parse("D4"))
    # vertex 4 has no arrow to 1 in the seed star, so phi_1 fixes it
    stepped = trail.step(1)
    assert sparse_eq(stepped.images.e_plus[3], trail.images.e_plus[3])
    assert sparse_eq(stepped.images.h[3], trail.images.h[3])


def test_phi_psi_inverse_on_generators():
    rng = random.Random(71)
    for name in ("A3", "B3", "C3", "G2"):
        trail = start_trail(DynkinType.parse(name))
        for _ in range(4):
            k = rng.randint(1, trail.quiver.n)
            stepped = trail.step(k)
            back = psi_k(trail.quiver, k, stepped.images, trail.alg)
            for a, b in zip(back.all_images(), trail.images.all_images()):
                assert sparse_eq(a, b)
            trail = stepped


def test_g2_triple_ad_images():
    # weight-3 arrows use coefficient -eps/6 and ad^3
    trail = start_trail(DynkinType.parse("G2"))
    C = trail.cartan()
    assert C.c(2, 1) == -1 and C.c(1, 2) == -3
    stepped = trail.step(1)  # arrow 2 -> 1 in the seed, c_12 = -3
    alg = trail.alg
    expected = sparse_scale(
        alg.bracket(alg.e(1), alg.bracket(alg.e(1), alg.bracket(alg.e(1), alg.e(2)))),
        Fraction(-1, 6),
    )
    assert sparse_eq(stepped.images.e_plus[1], expected)
    rep = verify_homomorphism(alg, stepped.images, all_relations(stepped.cartan()))
    assert rep.ok
    iso, rank = verify_isomorphism(alg, stepped.images)
    assert iso and rank == 14


def test_h_prod_lemma_on_random_words():
    rng = random.Random(73)
    trail = start_trail(DynkinType.parse("B3")).step(2)
    alg, img = trail.alg, trail.images
    C = trail.cartan()
    for _ in range(40):
        ell = rng.randint(1, 5)
        word = [
            gen_e(rng.randint(1, 3), rng.choice((1, -1))) for _ in range(ell)
        ]
        tail = bracket_word(alg, img, word)
        for i in (1, 2, 3):
            lam = sum(g[1] * C.c(i, g[2]) for g in word)
            got = bracket_word(alg, img, [gen_h(i)] + word)
            assert sparse_eq(got, sparse_scale(tail, lam))


def test_commuting_generators_lemma():
    for name in ("A3", "B3", "C3"):
        trail = start_trail(DynkinType.parse(name))
        trail = trail.step(2)
        alg, img = trail.alg, trail.images
        C = trail.cartan()
        for i in range(1, 4):
            for j in range(1, 4):
                if i == j or C.c(i, j) == 0:
                    continue
                delta = 1 if C.c(i, j) > 0 else -1
                a = alg.bracket(img.image(gen_e(i)), img.image(gen_e(j, delta)))
                b = alg.bracket(
                    img.image(gen_e(i, -1)), img.image(gen_e(j, -delta))
                )
                assert a == {} and b == {}


def test_two_lambda_identity():
    # [e_{d e k}, e_{d e k}, e_{-d e k}, e_{-d e k}, e_{e i}] = 2 l (l-1) e_{e i}
    rng = random.Random(79)
    for name in ("A3", "B3", "C3", "F4", "G2"):
        trail = start_trail(DynkinType.parse(name))
        for _ in range(2):
            trail = trail.step(rng.randint(1, trail.quiver.n))
        alg, img = trail.alg, trail.images
        C = trail.cartan()
        for k in range(1, C.n + 1):
            for i in range(1, C.n + 1):
                if i == k or C.c(k, i) == 0:
                    continue
                lam = abs(C.c(k, i))
                delta = 1 if C.c(k, i) > 0 else -1
                for eps in (1, -1):
                    word = [gen_e(k, delta * eps)] * 2 + [gen_e(k, -delta * eps)] * 2 + [
                        gen_e(i, eps)
                    ]
                    got = bracket_word(alg, img, word)
                    expect = sparse_scale(
                        img.image(gen_e(i, eps)), 2 * lam * (lam - 1)
                    )
                    assert sparse_eq(got, expect), (name, k, i, eps)


def test_g2_minus_36_identity():
    alg = chevalley_algebra(DynkinType.parse("G2"))
    img = standard_images(alg)
    left = bracket_word(alg, img, [gen_e(1), gen_e(1), gen_e(1), gen_e(2)])
    right = bracket_word(
        alg, img, [gen_e(1, -1), gen_e(1, -1), gen_e(1, -1), gen_e(2, -1)]
    )
    got = alg.bracket(left, right)
    assert sparse_eq(got, sparse_scale(sparse_add(alg.h(1), alg.h(2)), -36))


def _trail_with_cycle_shape(name, shape, max_len=4):
    """breadth-first search for a class member containing a cycle of the
    given shape, returned as a trail from the Dynkin seed."""
    t = DynkinType.parse(name)
    frontier = [start_trail(t)]
    seen = {frontier[0].quiver.key()}
    while frontier:
        nxt = []
        for trail in frontier:
            C = trail.cartan()
            for verts in chordless_cycles_of_cartan(C):
                if classify_cycle_shape(C, verts) == shape:
                    return trail, verts
            if len(trail.history) >= max_len:
                continue
            for k in range(1, trail.quiver.n + 1):
                stepped = trail.step(k)
                if stepped.quiver.key() not in seen:
                    seen.add(stepped.quiver.key())
                    nxt.append(stepped)
        frontier = nxt
    raise AssertionError(f"no {shape} found in type {name}")


def test_b3_cycle_longness_and_exclusions():
    trail, verts = _trail_with_cycle_shape("B3", "B3-cycle")
    C = trail.cartan()
    longs = long_vertices(C, verts)
    assert len(longs) == 2
    # the two long vertices carry the smaller symmetrizer entries
    short = (set(verts) - longs).pop()
    assert all(C.d[v - 1] < C.d[short - 1] for v in longs)
    imposed = r5_words_for_cycle(C, verts, excluded=False)
    excluded = r5_words_for_cycle(C, verts, excluded=True)
    assert len(imposed) == 8 and len(excluded) == 4
    rep = verify_homomorphism(
        trail.alg, trail.images, all_relations(C)
    )
    assert rep.ok
    results = excluded_words_nonzero(trail.alg, trail.images, C, verts)
    assert len(results) == 4 and all(nonzero for _, nonzero in results)


def test_c3_cycle_has_all_twelve_relations():
    trail, verts = _trail_with_cycle_shape("C3", "C3-cycle")
    C = trail.cartan()
    assert len(long_vertices(C, verts)) == 1
    imposed = r5_words_for_cycle(C, verts, excluded=False)
    assert len(imposed) == 12
    assert r5_words_for_cycle(C, verts, excluded=True) == []
    rep = verify_homomorphism(trail.alg, trail.images, all_relations(C))
    assert rep.ok


def test_f4_cycle_exclusions_and_sign_product():
    trail, verts = _trail_with_cycle_shape("F4", "F4-cycle")
    C = trail.cartan()
    p = len(verts)
    assert p == 4
    sign_product = 1
    for a in range(p):
        cij = C.c(verts[a], verts[(a + 1) % p])
        sign_product *= 1 if cij > 0 else -1
    assert sign_product == -1
    imposed = r5_words_for_cycle(C, verts, excluded=False)
    excluded = r5_words_for_cycle(C, verts, excluded=True)
    assert len(imposed) == 12 and len(excluded) == 4
    rep = verify_homomorphism(trail.alg, trail.images, all_relations(C))
    assert rep.ok
    results = excluded_words_nonzero(trail.alg, trail.images, C, verts)
    assert len(results) == 4 and all(nonzero for _, nonzero in results)


def test_weight_one_r5_closed_under_rotation():
    # rotating a sign-chained relation yields another imposed relation
    Q = mutate_quiver(dynkin_quiver(DynkinType.parse("A3")), 2)
    C = cartan_of_quiver(Q)
    verts = chordless_cycles_of_cartan(C)[0]
    words = {w for _, w in r5_words_for_cycle(C, verts)}
    for w in list(words):
        path = tuple(g[2] for g in w)
        rotated_path = path[1:] + (path[0],)
        eps2 = w[1][1]
        signs = sign_chain(C, rotated_path, eps2)
        rotated = tuple(gen_e(v, s) for v, s in zip(rotated_path, signs))
        assert rotated in words


def test_rootspace_example_vector():
    # [e'2, f'3] spans the (a2'-a3') space and lands in the span of f3;
    # the scalar is forced by [e2,[f2,f3]] = [h2,f3] = -c_23 f3 = +f3
    trail = start_trail(DynkinType.parse("A3"))
    stepped = trail.step(2)
    alg = trail.alg
    img = stepped.images
    vec = alg.bracket(img.image(gen_e(2)), img.image(gen_e(3, -1)))
    assert sparse_eq(vec, alg.e(3, -1))
    C_prime = stepped.cartan()
    lam = [beta_of_h(C_prime, (0, 1, -1), i) for i in (1, 2, 3)]
    space = root_space(alg, img.h, lam)
    assert len(space) == 1
    assert sparse_eq(space[0], alg.e(3, -1))


def test_rootspace_mutation_exhaustive_for_a3_and_b3():
    for name in ("A3", "B3"):
        for member in class_of_type(DynkinType.parse(name)):
            pass  # enumeration is exercised through trails below
        trail = start_trail(DynkinType.parse(name))
        rng = random.Random(83)
        for _ in range(3):
            k = rng.randint(1, trail.quiver.n)
            pairs = verify_rootspace_mutation(trail, k)
            assert len(pairs) == len(
                set(p for p, _ in pairs)
            )
            trail = trail.step(k)


def test_verify_sequence_report_shape():
    res = verify_sequence(DynkinType.parse("A3"), [2])
    assert res["report"]["dimension"] == 15
    assert res["report"]["isomorphism"] is True
    assert res["report"]["relations_checked"] == 60
    assert res["report"]["failures"] == []
    assert res["rootspace_pairs_checked"] == 12


def test_root_space_dense_fallback_and_commutation_guard():
    import pytest

    alg = chevalley_algebra(DynkinType.parse("A2"))
    # a non-Cartan h set must be rejected when it fails to commute
    with pytest.raises(Exception, match="commute"):
        root_space(alg, [alg.e(1), alg.e(1, -1)], [0, 0])
    # a single nilpotent image takes the dense route: the kernel of the
    # highest root vector's action is its 4-dimensional centralizer
    top = alg.root_vector((1, 1))
    centralizer = root_space(alg, [top], [0])
    assert len(centralizer) == 4


def test_zero_images_are_not_an_isomorphism():
    alg = chevalley_algebra(DynkinType.parse("A2"))
    zero = GeneratorImages(2, ({}, {}), ({}, {}), ({}, {}))
    iso, rank = verify_isomorphism(alg, zero)
    assert not iso and rank == 0
