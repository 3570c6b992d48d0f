#!/usr/bin/env python3
"""Census of signed mutation classes: labelled and relabelling-quotient
counts per Dynkin type, with purity / dangerous-cycle sanity checks."""

from __future__ import annotations

import argparse
import time

from mutalg.classes import canonical_key, class_of_type
from mutalg.cycles import dangerous_cycles
from mutalg.diagram import DynkinType
from mutalg.quiver import matrix_from_quiver


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument(
        "types", nargs="*",
        default=["A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "F4", "G2"],
    )
    ap.add_argument("--budget", type=int, default=None)
    args = ap.parse_args()

    print(f"{'type':>5} {'labelled':>9} {'quotient':>9} {'seconds':>8}")
    for name in args.types:
        t0 = time.perf_counter()
        members = class_of_type(DynkinType.parse(name), budget=args.budget)
        for q in members:
            B = matrix_from_quiver(q)
            assert B.is_pure() and not dangerous_cycles(B)
        quotient = len({canonical_key(q) for q in members})
        print(
            f"{name:>5} {len(members):>9} {quotient:>9} "
            f"{time.perf_counter() - t0:>8.2f}"
        )


if __name__ == "__main__":
    main()
