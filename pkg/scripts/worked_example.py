#!/usr/bin/env python3
"""Walk the rank-3 chain 1 <- 2 <- 3 through one mutation at vertex 2 and
print every derived object: matrices, Cartan counterparts, root systems,
the root mutation table, generator images, and the verification report."""

from __future__ import annotations

from mutalg.cartan import cartan_of_quiver, dynkin_quiver
from mutalg.diagram import DynkinType
from mutalg.linalg import mat_vec
from mutalg.presentation import start_trail, verify_sequence
from mutalg.quiver import matrix_from_quiver, mutate_quiver
from mutalg.roots import generate_root_system, root_mutation_matrix
from mutalg.serialize import root_pretty


def main() -> None:
    t = DynkinType.parse("A3")
    Q = dynkin_quiver(t)
    B = matrix_from_quiver(Q)
    print("seed quiver:", Q)
    print("gss matrix:")
    print(B)
    print("Cartan counterpart:")
    print(cartan_of_quiver(Q))

    Qp = mutate_quiver(Q, 2)
    print("\nafter mutation at 2:", Qp)
    print(matrix_from_quiver(Qp))
    Cp = cartan_of_quiver(Qp)
    print(Cp)

    rs = generate_root_system(Cp)
    print(f"\nroot system ({len(rs.roots)} roots):")
    print("  " + ", ".join(root_pretty(r, prime=True) for r in sorted(rs.roots)))

    R = root_mutation_matrix(Q, 2)
    print("\nroot mutation (primed simple basis -> unprimed roots):")
    for beta in sorted(r for r in rs.roots if sum(r) >= 0):
        image = tuple(mat_vec(R, list(beta)))
        print(f"  {root_pretty(beta, prime=True):>10}  ->  {root_pretty(image)}")

    trail = start_trail(t).step(2)
    print("\ngenerator images in the rank-3 structure algebra:")
    for i in range(3):
        print(f"  h'{i + 1} -> {dict(trail.images.h[i])}")
        print(f"  e'{i + 1} -> {dict(trail.images.e_plus[i])}")
        print(f"  f'{i + 1} -> {dict(trail.images.e_minus[i])}")

    res = verify_sequence(t, [2])
    rep = res["report"]
    print(
        f"\nverification: {rep['relations_checked']} relations, "
        f"{len(rep['failures'])} failures, dimension {rep['dimension']}, "
        f"isomorphism: {rep['isomorphism']}"
    )


if __name__ == "__main__":
    main()
