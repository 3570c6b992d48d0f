"""Unsigned/signed diagrams, Dynkin types, and their canonical data.

Convention lock (used consistently across the package):

  C <-> g        [h_i, e_j] = c_ij e_j   and   (ad e_i)^(1 - c_ij)(e_j) = 0
  C <-> diagram  |c_ij| > |c_ji|  <=>  i > j in the diagram order
  C <-> (-,-)    c_ij = (alpha_j, alpha_i^vee)
  C <-> W        s_i(alpha_j) = alpha_j - c_ij alpha_i

For an arrow i -> j with value (v1, v2): c_ij = v1 and c_ji = v2, so the
diagram order has i > j iff |v1| > |v2|; the bigger end of a double edge has
the smaller symmetrizer entry.  Type B_n places the bigger end of its double
edge at the internal vertex (so d = (1,...,1,2)), type C_n at the degree-1
extremity (d = (2,...,2,1)); this matches classifying the valued quiver
1 <- 2 <- 3 <- 4 with the last arrow valued (1,2) as B_4.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import SemanticError
from .quiver import SignedValuedQuiver

FAMILIES = "ABCDEFG"


@dataclass(frozen=True, slots=True)
class DynkinType:
    family: str
    rank: int

    def __post_init__(self):
        ok = (
            (self.family == "A" and self.rank >= 1)
            or (self.family in ("B", "C") and self.rank >= 2)
            or (self.family == "D" and self.rank >= 4)
            or (self.family == "E" and self.rank in (6, 7, 8))
            or (self.family == "F" and self.rank == 4)
            or (self.family == "G" and self.rank == 2)
        )
        if not ok:
            raise SemanticError(f"no Dynkin type {self.family}{self.rank}")

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"

    @staticmethod
    def parse(text: str) -> "DynkinType":
        s = text.strip().upper()
        if len(s) < 2 or s[0] not in FAMILIES or not s[1:].isdigit():
            raise SemanticError(f"cannot parse Dynkin type {text!r}")
        return DynkinType(s[0], int(s[1:]))


@dataclass(frozen=True, slots=True)
class DiagramEdge:
    i: int
    j: int  # i < j
    multiplicity: int
    order: Optional[int]  # +1: i > j, -1: i < j, 0: equal; None when mult = 1


@dataclass(frozen=True, slots=True)
class UnsignedDiagram:
    n: int
    edges: tuple[DiagramEdge, ...]


@dataclass(frozen=True, slots=True)
class SignedDiagram:
    base: UnsignedDiagram
    signs: tuple[tuple[int, int, int], ...]  # (i, j, epsilon_ij) per edge


def _edge_of_arrow(src: int, tgt: int, v1: int, v2: int) -> DiagramEdge:
    mult = abs(v1 * v2)
    order: Optional[int] = None
    if mult >= 2:
        if abs(v1) > abs(v2):
            order = 1 if src < tgt else -1
        elif abs(v1) < abs(v2):
            order = -1 if src < tgt else 1
        else:
            order = 0
    i, j = min(src, tgt), max(src, tgt)
    return DiagramEdge(i, j, mult, order)


def unsigned_diagram(Q: SignedValuedQuiver) -> UnsignedDiagram:
    edges = tuple(
        sorted(
            (_edge_of_arrow(a.src, a.tgt, a.v1, a.v2) for a in Q.arrows),
            key=lambda e: (e.i, e.j),
        )
    )
    return UnsignedDiagram(Q.n, edges)


def signed_diagram(Q: SignedValuedQuiver) -> SignedDiagram:
    signs = tuple(
        sorted(
            (min(a.src, a.tgt), max(a.src, a.tgt), a.sign) for a in Q.arrows
        )
    )
    return SignedDiagram(unsigned_diagram(Q), signs)


def _leg_lengths(adj: dict[int, list[int]], branch: int) -> list[int]:
    lengths = []
    for start in adj[branch]:
        length = 1
        prev, cur = branch, start
        while True:
            nxts = [x for x in adj[cur] if x != prev]
            if not nxts:
                break
            if len(nxts) > 1:
                return []
            prev, cur = cur, nxts[0]
            length += 1
        lengths.append(length)
    return sorted(lengths)


def recognize_dynkin(diag: UnsignedDiagram) -> Optional[DynkinType]:
    """Match a diagram against A-G up to graph isomorphism, using edge
    multiplicities and the order tag on multiple edges."""
    n = diag.n
    if n == 0:
        return None
    if len(diag.edges) != n - 1:
        return None  # Dynkin diagrams are trees
    adj: dict[int, list[int]] = {v: [] for v in range(1, n + 1)}
    for e in diag.edges:
        adj[e.i].append(e.j)
        adj[e.j].append(e.i)
    seen = {1}
    stack = [1]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != n:
        return None  # disconnected

    multis = [e for e in diag.edges if e.multiplicity >= 2]
    degrees = {v: len(adj[v]) for v in adj}
    branch_vertices = [v for v in adj if degrees[v] >= 3]

    if not multis:
        if not branch_vertices:
            return DynkinType("A", n)
        if len(branch_vertices) != 1:
            return None
        legs = _leg_lengths(adj, branch_vertices[0])
        if not legs or len(legs) != 3:
            return None
        if legs[0] == 1 and legs[1] == 1:
            return DynkinType("D", n)
        if legs[:2] == [1, 2] and legs[2] in (2, 3, 4):
            return DynkinType("E", n)
        return None

    if len(multis) != 1 or branch_vertices:
        return None
    edge = multis[0]
    if edge.multiplicity == 3:
        return DynkinType("G", 2) if n == 2 else None
    if edge.multiplicity != 2:
        return None
    # the underlying tree must be a path with the double edge at an end (B/C)
    # or in the middle of a 4-chain (F4)
    if any(degrees[v] > 2 for v in adj):
        return None
    ends = [v for v in adj if degrees[v] == 1]
    if n == 2:
        return DynkinType("B", 2)
    both_inner = degrees[edge.i] == 2 and degrees[edge.j] == 2
    if both_inner:
        return DynkinType("F", 4) if n == 4 else None
    extremity = edge.i if degrees[edge.i] == 1 else edge.j
    bigger = edge.i if edge.order == 1 else edge.j
    if edge.order == 0:
        return None
    return DynkinType("C", n) if bigger == extremity else DynkinType("B", n)
