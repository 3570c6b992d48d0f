from __future__ import annotations

import random

import pytest

from mutalg.cartan import CartanCounterpart, cartan_of_quiver, classical_cartan, dynkin_quiver
from mutalg.classes import class_of_type
from mutalg.diagram import DynkinType
from mutalg.errors import BudgetExceededError, SemanticError
from mutalg.linalg import identity, mat_mul, mat_vec
from mutalg.quiver import SignedValuedQuiver, mutate_quiver, mutate_quiver_sequence
from mutalg.roots import (
    check_root_system_axioms,
    companion_images,
    generate_root_system,
    inverse_root_mutation_matrix,
    is_signed_companion_basis,
    mutate_root,
    root_mutation_matrix,
    simple_reflection,
    type_a_roots_recursive,
)

# coxeter numbers: |Phi| = rank * h
EXPECTED_ROOT_COUNTS = {
    "A1": 2, "A2": 6, "A3": 12, "A4": 20,
    "B2": 8, "B3": 18, "C3": 18, "D4": 24, "F4": 48, "G2": 12,
}


def a3_mutated_quiver():
    return mutate_quiver(dynkin_quiver(DynkinType.parse("A3")), 2)


def test_mutated_a3_root_system_is_the_listed_twelve():
    C = cartan_of_quiver(a3_mutated_quiver())
    rs = generate_root_system(C)
    positives = {
        (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (1, 0, 1), (0, -1, 1),
    }
    expected = positives | {tuple(-x for x in r) for r in positives}
    assert set(rs.roots) == expected


def test_simple_reflection_examples():
    A2 = classical_cartan(DynkinType.parse("A2"))
    assert simple_reflection(A2, 1, (0, 1)) == (1, 1)
    Cp = cartan_of_quiver(a3_mutated_quiver())
    assert simple_reflection(Cp, 2, (0, 0, 1)) == (0, -1, 1)


def test_reflections_are_involutions():
    rng = random.Random(47)
    C = cartan_of_quiver(a3_mutated_quiver())
    for _ in range(100):
        beta = tuple(rng.randint(-4, 4) for _ in range(3))
        for i in (1, 2, 3):
            assert simple_reflection(C, i, simple_reflection(C, i, beta)) == beta


def test_root_counts_by_orbit_closure():
    for name, count in EXPECTED_ROOT_COUNTS.items():
        rs = generate_root_system(classical_cartan(DynkinType.parse(name)))
        assert len(rs.roots) == count, name


def test_orbit_cap_signals_non_finite_input():
    # an affine-flavoured Cartan with a degenerate form never closes up
    C = CartanCounterpart.from_rows([[2, -2], [-2, 2]], [1, 1])
    with pytest.raises(BudgetExceededError):
        generate_root_system(C, cap=500)


def test_axioms_on_mutated_class_members():
    # exhaustive over the small classes, sampled over the rank-4 ones
    for name in ("A2", "A3", "B3", "C3", "G2"):
        for Q in class_of_type(DynkinType.parse(name)):
            check_root_system_axioms(generate_root_system(cartan_of_quiver(Q)))
    rng = random.Random(53)
    pool = []
    for name in ("A4", "D4", "F4"):
        pool.extend(class_of_type(DynkinType.parse(name)))
    for Q in rng.sample(pool, 40):
        check_root_system_axioms(generate_root_system(cartan_of_quiver(Q)))


def test_simple_root_lengths_and_pairings():
    for name in ("A3", "B3", "C3", "D4", "F4", "G2"):
        C = classical_cartan(DynkinType.parse(name))
        rs = generate_root_system(C)
        n = C.n
        for i in range(n):
            e_i = tuple(1 if p == i else 0 for p in range(n))
            assert rs.inner(e_i, e_i) == 2 * C.d[i]
            for j in range(n):
                e_j = tuple(1 if p == j else 0 for p in range(n))
                assert rs.pairing(e_i, e_j) == C.entries[j][i]


def test_inner_product_is_reflection_invariant():
    rng = random.Random(59)
    C = cartan_of_quiver(a3_mutated_quiver())
    rs = generate_root_system(C)
    for _ in range(500):
        u = tuple(rng.randint(-3, 3) for _ in range(3))
        v = tuple(rng.randint(-3, 3) for _ in range(3))
        k = rng.randint(1, 3)
        su = simple_reflection(C, k, u)
        sv = simple_reflection(C, k, v)
        assert rs.inner(su, sv) == rs.inner(u, v)


def test_pairing_rejects_zero_vector():
    rs = generate_root_system(classical_cartan(DynkinType.parse("A2")))
    with pytest.raises(SemanticError):
        rs.pairing((1, 0), (0, 0))


def test_root_mutation_table_for_mutated_a3():
    Q = dynkin_quiver(DynkinType.parse("A3"))
    R = root_mutation_matrix(Q, 2)
    table = {
        (1, 0, 0): (1, 0, 0),
        (0, 1, 0): (0, 1, 0),
        (0, 0, 1): (0, 1, 1),
        (1, 1, 0): (1, 1, 0),
        (1, 0, 1): (1, 1, 1),
        (0, -1, 1): (0, 0, 1),
    }
    for src, dst in table.items():
        assert tuple(mat_vec(R, list(src))) == dst
        assert mutate_root(Q, 2, src) == dst


def test_root_mutation_is_a_root_bijection_with_inverse():
    for name in ("A3", "B3", "G2"):
        for Q in class_of_type(DynkinType.parse(name)):
            phi = set(generate_root_system(cartan_of_quiver(Q)).roots)
            for k in range(1, Q.n + 1):
                Qp = mutate_quiver(Q, k)
                phi_p = set(generate_root_system(cartan_of_quiver(Qp)).roots)
                R = root_mutation_matrix(Q, k)
                R_inv = inverse_root_mutation_matrix(Qp, k)
                assert mat_mul(R, R_inv) == identity(Q.n)
                assert mat_mul(R_inv, R) == identity(Q.n)
                image = {tuple(mat_vec(R, list(b))) for b in phi_p}
                assert image == phi


def test_root_mutation_preserves_inner_products():
    for Q in class_of_type(DynkinType.parse("B3")):
        M = cartan_of_quiver(Q).gram()
        for k in range(1, Q.n + 1):
            Qp = mutate_quiver(Q, k)
            Mp = cartan_of_quiver(Qp).gram()
            R = root_mutation_matrix(Q, k)
            n = Q.n
            got = [
                [
                    sum(R[a][i] * M[a][b] * R[b][j] for a in range(n) for b in range(n))
                    for j in range(n)
                ]
                for i in range(n)
            ]
            assert tuple(tuple(row) for row in got) == Mp


def test_companion_of_empty_sequence_is_the_simple_basis():
    Q = dynkin_quiver(DynkinType.parse("B3"))
    gammas = companion_images(Q, [])
    assert gammas == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    C = cartan_of_quiver(Q)
    ambient = generate_root_system(C)
    ok, msg = is_signed_companion_basis(gammas, ambient, C)
    assert ok, msg


def test_companion_of_a3_after_mutation_at_2():
    Q = dynkin_quiver(DynkinType.parse("A3"))
    gammas = companion_images(Q, [2])
    assert gammas == [(1, 0, 0), (0, 1, 0), (0, 1, 1)]
    Cp = cartan_of_quiver(mutate_quiver(Q, 2))
    ambient = generate_root_system(cartan_of_quiver(Q))
    ok, msg = is_signed_companion_basis(gammas, ambient, Cp)
    assert ok, msg


def test_companion_failure_reports_entry():
    Q = dynkin_quiver(DynkinType.parse("A2"))
    ambient = generate_root_system(cartan_of_quiver(Q))
    bad = [(1, 0), (1, 1)]
    ok, msg = is_signed_companion_basis(bad, ambient, cartan_of_quiver(Q))
    assert not ok and "Gram" in msg


def test_companion_random_sequences():
    rng = random.Random(61)
    for name in ("A2", "A3", "B3", "C3", "D4", "G2"):
        t = DynkinType.parse(name)
        Q0 = dynkin_quiver(t)
        ambient = generate_root_system(cartan_of_quiver(Q0))
        for _ in range(10):
            seq = [rng.randint(1, Q0.n) for _ in range(rng.randint(0, 8))]
            gammas = companion_images(Q0, seq)
            C_end = cartan_of_quiver(mutate_quiver_sequence(Q0, seq))
            ok, msg = is_signed_companion_basis(gammas, ambient, C_end)
            assert ok, f"{name} seq={seq}: {msg}"


def test_type_a_recursion_base_case():
    Q = SignedValuedQuiver.build(1, [])
    assert type_a_roots_recursive(Q) == {(1,), (-1,)}


def test_type_a_recursion_on_mutated_a3():
    Q = a3_mutated_quiver()
    got = type_a_roots_recursive(Q)
    rs = generate_root_system(cartan_of_quiver(Q))
    assert got == set(rs.roots)
    assert (0, 1, -1) in got and (0, -1, 1) in got


def test_type_a_recursion_matches_orbit_on_whole_a4_class():
    for Q in class_of_type(DynkinType.parse("A4")):
        got = type_a_roots_recursive(Q)
        assert got == set(generate_root_system(cartan_of_quiver(Q)).roots)


def test_type_a_recursion_rejects_other_types():
    with pytest.raises(SemanticError):
        type_a_roots_recursive(dynkin_quiver(DynkinType.parse("B3")))
