"""JSON encodings, DOT export, and the inline arrow DSL.

Schemas (all vertex labels 1-based):
  gss matrix   {"n": int, "d": [int], "entries": [[{"a": int, "b": int}]]}
  quiver       {"n": int, "d": [int], "arrows": [{"src": i, "tgt": j, "v": [v1, v2]}]}
  root system  {"cartan": [[int]], "d": [int], "roots": [[int]]}  (roots lex-sorted)
  report       {"relations_checked": int, "failures": [{"relation": str,
                "residual": [str]}], "dimension": int, "isomorphism": bool}
Rationals are serialized as "p/q" strings; ring elements render as "a+bt"
with the natural "t", "-t", "0" abbreviations.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Any, Optional, Sequence

from .errors import ParseError
from .gss import GssMatrix
from .quiver import SignedValuedQuiver
from .roots import RootSystemData
from .tring import TElem


def gss_to_json(B: GssMatrix) -> dict:
    return {
        "n": B.n,
        "d": list(B.d),
        "entries": [[{"a": x.a, "b": x.b} for x in row] for row in B.entries],
    }


def gss_from_json(data: Any) -> GssMatrix:
    try:
        entries = [
            [TElem(int(cell["a"]), int(cell["b"])) for cell in row]
            for row in data["entries"]
        ]
        d = [int(x) for x in data["d"]] if "d" in data and data["d"] else None
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed gss matrix JSON: {exc}") from exc
    B = GssMatrix.from_entries(entries, d)
    if "n" in data and int(data["n"]) != B.n:
        raise ParseError("field n disagrees with the entries table")
    return B


def quiver_to_json(Q: SignedValuedQuiver) -> dict:
    return {
        "n": Q.n,
        "d": list(Q.d),
        "arrows": [
            {"src": a.src, "tgt": a.tgt, "v": [a.v1, a.v2]}
            for a in sorted(Q.arrows, key=lambda a: (a.src, a.tgt))
        ],
    }


def quiver_from_json(data: Any) -> SignedValuedQuiver:
    try:
        n = int(data["n"])
        arrows = [
            (int(a["src"]), int(a["tgt"]), int(a["v"][0]), int(a["v"][1]))
            for a in data.get("arrows", [])
        ]
        d = [int(x) for x in data["d"]] if data.get("d") else None
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise ParseError(f"malformed quiver JSON: {exc}") from exc
    return SignedValuedQuiver.build(n, arrows, d)


def roots_to_json(RS: RootSystemData) -> dict:
    return {
        "cartan": [list(row) for row in RS.cartan.entries],
        "d": list(RS.cartan.d),
        "roots": [list(r) for r in sorted(RS.roots)],
    }


def frac_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def report_to_json(
    relations_checked: int,
    failures: Sequence[tuple[str, Sequence[Fraction]]],
    dimension: int,
    isomorphism: bool,
) -> dict:
    return {
        "relations_checked": relations_checked,
        "failures": [
            {"relation": name, "residual": [frac_str(Fraction(x)) for x in res]}
            for name, res in failures
        ],
        "dimension": dimension,
        "isomorphism": isomorphism,
    }


DOT_HEADER = (
    "// signed valued quiver; solid = negative arrow, dashed = positive arrow\n"
    "// edge label: value (v1,v2)\n"
)


def quiver_to_dot(Q: SignedValuedQuiver) -> str:
    lines = [DOT_HEADER + "digraph quiver {"]
    for v in range(1, Q.n + 1):
        lines.append(f'  {v} [label="{v} (d={Q.d[v - 1]})"];')
    for a in sorted(Q.arrows, key=lambda a: (a.src, a.tgt)):
        style = "solid" if a.sign == -1 else "dashed"
        lines.append(
            f'  {a.src} -> {a.tgt} [style={style} label="({a.v1},{a.v2})"];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


_ARROW_RE = re.compile(
    r"^\s*(\d+)\s*-\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)->\s*(\d+)\s*$"
)


def quiver_from_dsl(text: str, n: Optional[int] = None) -> SignedValuedQuiver:
    """Parse arrows like "1 -(-1,-1)-> 2", separated by ";" or newlines."""
    arrows = []
    max_vertex = 0
    for chunk in re.split(r"[;\n]", text):
        if not chunk.strip():
            continue
        m = _ARROW_RE.match(chunk)
        if not m:
            raise ParseError(f"cannot parse arrow {chunk.strip()!r}")
        src, v1, v2, tgt = int(m[1]), int(m[2]), int(m[3]), int(m[4])
        arrows.append((src, tgt, v1, v2))
        max_vertex = max(max_vertex, src, tgt)
    if n is None:
        n = max_vertex
    if n == 0:
        raise ParseError("empty quiver description")
    return SignedValuedQuiver.build(n, arrows)


def root_pretty(coords: Sequence[int], prime: bool = False) -> str:
    """Render a root as a signed sum like "a1+a2" or "-a2+a3"."""
    mark = "'" if prime else ""
    parts = []
    for i, c in enumerate(coords, start=1):
        if c == 0:
            continue
        mag = "" if abs(c) == 1 else str(abs(c))
        term = f"{mag}a{i}{mark}"
        parts.append(("+" if c > 0 else "-") + term)
    if not parts:
        return "0"
    out = "".join(parts)
    return out[1:] if out.startswith("+") else out
