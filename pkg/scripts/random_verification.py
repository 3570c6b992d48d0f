#!/usr/bin/env python3
"""Random verification sweep: for each type, drive random mutation
sequences from the Dynkin seed and verify relations, closure rank,
inverse property, and root-space compatibility."""

from __future__ import annotations

import argparse
import random
import time

from mutalg.diagram import DynkinType
from mutalg.presentation import verify_sequence


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument(
        "--types", nargs="*",
        default=["A2", "A3", "A4", "B3", "C3", "D4", "F4", "G2"],
    )
    ap.add_argument("--per-type", type=int, default=5)
    ap.add_argument("--max-len", type=int, default=6)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    for name in args.types:
        t = DynkinType.parse(name)
        for _ in range(args.per_type):
            seq = [
                rng.randint(1, t.rank)
                for _ in range(rng.randint(0, args.max_len))
            ]
            t0 = time.perf_counter()
            res = verify_sequence(t, seq)
            rep = res["report"]
            status = "ok" if rep["isomorphism"] and not rep["failures"] else "FAIL"
            print(
                f"{name} seq={seq}: {status} dim={rep['dimension']} "
                f"relations={rep['relations_checked']} "
                f"rootspaces={res['rootspace_pairs_checked']} "
                f"({time.perf_counter() - t0:.2f}s)"
            )


if __name__ == "__main__":
    main()
