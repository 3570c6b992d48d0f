from __future__ import annotations

import random
from fractions import Fraction

import pytest

from mutalg.chevalley import chevalley_algebra
from mutalg.diagram import DynkinType
from mutalg.errors import SemanticError
from mutalg.linalg import sparse_eq, sparse_scale


def alg_of(name):
    return chevalley_algebra(DynkinType.parse(name))


def test_dimensions():
    expected = {
        "A1": 3, "A2": 8, "A3": 15, "A4": 24,
        "B2": 10, "B3": 21, "C3": 21, "D4": 28, "F4": 52, "G2": 14,
    }
    for name, dim in expected.items():
        assert alg_of(name).dim == dim


def test_sl2_table():
    a = alg_of("A1")
    e, f, h = a.e(1), a.e(1, -1), a.h(1)
    assert sparse_eq(a.bracket(e, f), h)
    assert sparse_eq(a.bracket(h, e), sparse_scale(e, 2))
    assert sparse_eq(a.bracket(h, f), sparse_scale(f, -2))


def test_rank_nine_rejected():
    with pytest.raises(SemanticError):
        chevalley_algebra(DynkinType.parse("A9"))


def test_weights_of_root_vectors():
    a = alg_of("B3")
    C = a.cartan
    for gamma in a.basis_roots:
        x = a.root_vector(gamma)
        for i in range(1, 4):
            got = a.bracket(a.h(i), x)
            lam = sum(C.c(i, j + 1) * gamma[j] for j in range(3))
            assert sparse_eq(got, sparse_scale(x, lam))


def test_structure_constants_are_pm_chain_length():
    # N(alpha, beta) = +-(p+1) with p the chain length max{k: beta - k alpha}
    a = alg_of("G2")
    roots = set(a.roots.roots)
    for g1 in roots:
        for g2 in roots:
            s = tuple(x + y for x, y in zip(g1, g2))
            if s not in roots:
                continue
            val = a.bracket(a.root_vector(g1), a.root_vector(g2))
            coeff = val[a.n + a.root_index[s]]
            p = 0
            cur = tuple(x - y for x, y in zip(g2, g1))
            while cur in roots:
                p += 1
                cur = tuple(x - y for x, y in zip(cur, g1))
            assert abs(coeff) == p + 1, (g1, g2)


def test_opposite_root_vectors_bracket_to_coroot():
    a = alg_of("C3")
    for gamma in a.basis_roots:
        x = a.root_vector(gamma)
        y = a.root_vector(tuple(-c for c in gamma))
        h = a.bracket(x, y)
        # h acts on x with eigenvalue (gamma, gamma^vee) = 2
        assert sparse_eq(a.bracket(h, x), sparse_scale(x, 2))


def test_bracket_antisymmetry_randomized():
    rng = random.Random(67)
    a = alg_of("D4")
    for _ in range(200):
        i, j = rng.randrange(a.dim), rng.randrange(a.dim)
        u, v = {i: Fraction(1)}, {j: Fraction(1)}
        assert sparse_eq(a.bracket(u, v), sparse_scale(a.bracket(v, u), -1))


def test_highest_root_vector_is_killed_by_raising():
    a = alg_of("A3")
    top = a.root_vector((1, 1, 1))
    for i in (1, 2, 3):
        assert a.bracket(a.e(i), top) == {}


def test_iterated_bracket_spans_the_highest_root_space():
    # [e1,[e2,e3]] is a unit multiple of the highest root vector, the
    # analogue of the long matrix unit in the rank-3 special linear algebra
    a = alg_of("A3")
    val = a.bracket(a.e(1), a.bracket(a.e(2), a.e(3)))
    top_idx = a.n + a.root_index[(1, 1, 1)]
    assert set(val) == {top_idx}
    assert abs(val[top_idx]) == 1
