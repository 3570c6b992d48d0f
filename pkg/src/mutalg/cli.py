"""Command-line interface.

Subcommands: mutate, class, roots, verify, serve.  Exit codes: 0 ok,
2 parse error, 3 semantic error, 4 budget exceeded.  Machine-readable
output with --json is byte-stable across runs (sorted keys, stable orders).
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Optional, Sequence

from .cartan import cartan_of_quiver, dynkin_quiver
from .classes import is_mutation_dynkin, mutation_class
from .diagram import DynkinType
from .errors import MutalgError, ParseError, SemanticError
from .gss import GssMatrix, mutate_sequence
from .presentation import verify_sequence
from .quiver import SignedValuedQuiver, matrix_from_quiver, quiver_from_matrix
from .roots import generate_root_system
from .serialize import (
    gss_from_json,
    gss_to_json,
    quiver_from_dsl,
    quiver_from_json,
    quiver_to_dot,
    quiver_to_json,
    root_pretty,
    roots_to_json,
)


def _emit(payload: dict, as_json: bool, human: str) -> None:
    if as_json:
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print(human)


def _load_input(args) -> tuple[Optional[SignedValuedQuiver], Optional[GssMatrix]]:
    """Returns (quiver, matrix); exactly one is set.  Matrix-only inputs stay
    matrices (they may be non-pure)."""
    sources = [s for s in (args.type, args.dsl, args.input) if s]
    if len(sources) != 1:
        raise ParseError("provide exactly one of --type, --dsl, --input")
    if args.type:
        return dynkin_quiver(DynkinType.parse(args.type)), None
    if args.dsl:
        return quiver_from_dsl(args.dsl), None
    text = sys.stdin.read() if args.input == "-" else open(args.input).read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON input: {exc}") from exc
    if "entries" in data:
        return None, gss_from_json(data)
    return quiver_from_json(data), None


def _parse_seq(text: Optional[str]) -> list[int]:
    if not text:
        return []
    try:
        return [int(x) for x in text.replace(",", " ").split()]
    except ValueError as exc:
        raise ParseError(f"bad mutation sequence {text!r}") from exc


def cmd_mutate(args) -> int:
    quiver, matrix = _load_input(args)
    B = matrix if matrix is not None else matrix_from_quiver(quiver)
    seq = _parse_seq(args.seq)
    warnings = []
    cur = B
    for pos, k in enumerate(seq):
        if cur.is_pure():
            from .gss import find_3cycle_violation

            triple = find_3cycle_violation(cur, k)
            if triple is not None:
                warnings.append(
                    f"step {pos + 1}: mutation at {k} violates the positive "
                    f"3-cycle condition at triple {triple}; result is not pure"
                )
        else:
            warnings.append(f"step {pos + 1}: mutating a non-pure matrix at {k}")
        cur = mutate_sequence(cur, [k])
    payload = {
        "sequence": seq,
        "result": {
            "matrix": gss_to_json(cur),
            "pure": cur.is_pure(),
            "quiver": quiver_to_json(quiver_from_matrix(cur)) if cur.is_pure() else None,
        },
        "warnings": warnings,
    }
    lines = [str(cur), f"pure: {cur.is_pure()}"]
    if cur.is_pure():
        lines.append(str(quiver_from_matrix(cur)))
    lines.extend(f"warning: {w}" for w in warnings)
    _emit(payload, args.json, "\n".join(lines))
    return 0


def cmd_class(args) -> int:
    quiver, matrix = _load_input(args)
    if quiver is None:
        quiver = quiver_from_matrix(matrix)
    members = mutation_class(quiver, budget=args.budget, quotient=args.quotient)
    payload = {
        "count": len(members),
        "quotient": args.quotient,
        "members": [quiver_to_json(q) for q in members],
    }
    head = [f"class size: {len(members)}" + (" (up to relabelling)" if args.quotient else "")]
    shown = members if args.all else members[:10]
    head.extend(str(q) for q in shown)
    if len(shown) < len(members):
        head.append(f"... {len(members) - len(shown)} more (use --all)")
    _emit(payload, args.json, "\n".join(head))
    return 0


def cmd_roots(args) -> int:
    quiver, matrix = _load_input(args)
    if quiver is None:
        quiver = quiver_from_matrix(matrix)
    seq = _parse_seq(args.seq)
    from .quiver import mutate_quiver_sequence

    quiver = mutate_quiver_sequence(quiver, seq)
    B = matrix_from_quiver(quiver)
    if is_mutation_dynkin(B, args.budget) is None:
        raise SemanticError("input is not mutation Dynkin; root system undefined")
    rs = generate_root_system(cartan_of_quiver(quiver))
    payload = roots_to_json(rs)
    payload["count"] = len(rs.roots)
    pretty = ", ".join(root_pretty(r) for r in sorted(rs.roots))
    _emit(payload, args.json, f"{len(rs.roots)} roots: {pretty}")
    return 0


def cmd_verify(args) -> int:
    t = DynkinType.parse(args.type) if args.type else None
    if t is None:
        raise ParseError("verify requires --type")
    sequences: list[list[int]]
    if args.random:
        rng = random.Random(args.seed)
        sequences = [
            [rng.randrange(1, t.rank + 1) for _ in range(rng.randrange(1, 7))]
            for _ in range(args.random)
        ]
    else:
        sequences = [_parse_seq(args.seq)]
    results = []
    for seq in sequences:
        results.append(
            verify_sequence(
                t,
                seq,
                check_rootspaces=not args.no_rootspaces,
                experimental_r5=args.experimental_r5,
            )
        )
    payload = {"results": results}
    lines = []
    for res in results:
        rep = res["report"]
        lines.append(
            f"type {res['type']} seq {res['sequence']}: "
            f"relations {rep['relations_checked']} "
            f"failures {len(rep['failures'])}, dimension {rep['dimension']}, "
            f"isomorphism: {str(rep['isomorphism']).lower()}"
        )
    _emit(payload, args.json, "\n".join(lines))
    return 0


def cmd_export(args) -> int:
    quiver, matrix = _load_input(args)
    if quiver is None:
        quiver = quiver_from_matrix(matrix)
    seq = _parse_seq(args.seq)
    from .quiver import mutate_quiver_sequence

    quiver = mutate_quiver_sequence(quiver, seq)
    print(quiver_to_dot(quiver), end="")
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port)
    return 0


def _add_input_flags(p: argparse.ArgumentParser, with_seq: bool = True) -> None:
    p.add_argument("--type", "-t", help="Dynkin type preset, e.g. A3")
    p.add_argument("--dsl", help='inline arrows: "1 -(-1,-1)-> 2; 2 -(1,2)-> 3"')
    p.add_argument("--input", "-i", help="JSON file with a quiver or matrix ('-' = stdin)")
    if with_seq:
        p.add_argument("--seq", "-s", help="mutation sequence, e.g. 2,1,3")
    p.add_argument("--json", action="store_true", help="machine-readable output")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="mutalg",
        description="signed valued quiver mutation, root systems, and "
        "Lie algebra presentation verification",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mutate", help="apply a signed mutation sequence")
    _add_input_flags(p)
    p.set_defaults(func=cmd_mutate)

    p = sub.add_parser("class", help="enumerate a mutation class")
    _add_input_flags(p, with_seq=False)
    p.add_argument("--budget", type=int, default=None, help="node cap")
    p.add_argument("--quotient", action="store_true", help="quotient by relabelling")
    p.add_argument("--all", action="store_true", help="print every member")
    p.set_defaults(func=cmd_class)

    p = sub.add_parser("roots", help="generate the root system")
    _add_input_flags(p)
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("verify", help="verify the presentation machinery")
    p.add_argument("--type", "-t", required=True)
    p.add_argument("--seq", "-s", help="mutation sequence, e.g. 2")
    p.add_argument("--random", type=int, default=0, help="verify N random sequences")
    p.add_argument("--seed", type=int, default=0, help="RNG seed for --random")
    p.add_argument("--no-rootspaces", action="store_true")
    p.add_argument(
        "--experimental-r5",
        action="store_true",
        help="report which sign-chained cycle words vanish in the image "
        "(informational; nothing is asserted)",
    )
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export", help="DOT export of a (mutated) quiver")
    _add_input_flags(p)
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("serve", help="run the HTTP session API")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=cmd_serve)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except MutalgError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
