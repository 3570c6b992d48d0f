"""Chordless cycles in gss matrices, dangerous cycles, and the mutation
sequences that witness loss of purity.
"""

from __future__ import annotations

from dataclasses import dataclass
from .errors import SemanticError
from .gss import GssMatrix, mutate_matrix
from .tring import TElem, ONE


@dataclass(frozen=True, slots=True)
class CycleReport:
    """A chordless cycle, canonically rotated, with its mutation-relevant flags."""

    vertices: tuple[int, ...]
    oriented: bool
    chordless: bool
    dangerous: bool


def _canonical_cycle(seq: tuple[int, ...]) -> tuple[int, ...]:
    """Smallest rotation starting at the minimal vertex, forward direction
    preferred over reversal."""
    candidates = []
    p = len(seq)
    for direction in (seq, (seq[0],) + tuple(reversed(seq[1:]))):
        for shift in range(p):
            rot = direction[shift:] + direction[:shift]
            if rot[0] == min(seq):
                candidates.append(rot)
    return min(candidates)


def _cycle_flags(B: GssMatrix, verts: tuple[int, ...]) -> CycleReport:
    p = len(verts)
    ent = B.entries
    idx = [v - 1 for v in verts]
    chordless = True
    for a in range(p):
        for b in range(p):
            if a == b or (a - b) % p == 1 or (b - a) % p == 1:
                continue
            if not ent[idx[a]][idx[b]].is_zero():
                chordless = False
    oriented = False
    for direction in (idx, [idx[0]] + list(reversed(idx[1:]))):
        if all(
            ent[direction[a]][direction[(a + 1) % p]].sign() == 1 for a in range(p)
        ):
            oriented = True
    prod = ONE
    for a in range(p):
        prod = prod * ent[idx[a]][idx[(a + 1) % p]]
    # entries of a pure matrix contribute t for each tZ factor, so the
    # product lies in t^p Z exactly when it sits in the right parity class
    dangerous = chordless and (
        prod.is_t_multiple() if p % 2 == 1 else prod.is_int()
    ) and not prod.is_zero()
    return CycleReport(verts, oriented, chordless, dangerous)


def chordless_cycles(B: GssMatrix) -> list[CycleReport]:
    """All chordless cycles of the support graph, one canonical representative
    each, sorted by (length, vertex tuple)."""
    n = B.n
    adj = [set() for _ in range(n + 1)]
    for i, j in B.support_edges():
        adj[i].add(j)
        adj[j].add(i)
    found: dict[tuple[int, ...], tuple[int, ...]] = {}

    def extend(path: list[int]) -> None:
        start = path[0]
        last = path[-1]
        for nxt in sorted(adj[last]):
            if nxt == start and len(path) >= 3:
                key = tuple(sorted(path))
                if key not in found:
                    cand = _canonical_cycle(tuple(path))
                    rep = _cycle_flags(B, cand)
                    if rep.chordless:
                        found[key] = cand
                continue
            if nxt <= start or nxt in path:
                continue
            # chordless paths only: the new vertex may touch nothing in the
            # path except its predecessor (the start is allowed when closing)
            if any(v in adj[nxt] for v in path[:-1] if v != start):
                continue
            extend(path + [nxt])

    for v in range(1, n + 1):
        extend([v])
    reports = [_cycle_flags(B, verts) for verts in found.values()]
    return sorted(reports, key=lambda r: (len(r.vertices), r.vertices))


def dangerous_cycles(B: GssMatrix) -> list[CycleReport]:
    return [c for c in chordless_cycles(B) if c.dangerous]


def _cycle_entry(B: GssMatrix, u: int, v: int) -> TElem:
    return B.entry(u, v)


def nonpure_witness(B: GssMatrix, cycle: CycleReport) -> list[int]:
    """A mutation sequence driving B out of the pure class.

    For an oriented dangerous p-cycle (i_1, ..., i_p) this is
    (i_1, ..., i_{p-2}); unoriented cycles are first mutated at a sink of the
    cycle to create a composable pair.  The result is replay-verified.
    """
    if not B.is_pure():
        raise SemanticError("witness requires a pure starting matrix")
    live = _cycle_flags(B, cycle.vertices)
    if not live.dangerous:
        raise SemanticError(f"cycle {cycle.vertices} is not dangerous in this matrix")
    verts = list(cycle.vertices)
    cur = B
    seq: list[int] = []
    guard = 0
    while True:
        guard += 1
        if guard > 4 * len(cycle.vertices) + 8:
            raise SemanticError("witness search failed to converge")
        p = len(verts)
        # a vertex is composable when one cycle edge points in and the other
        # out; sinks have both pointing in
        composable = []
        sinks = []
        for a in range(p):
            s_prev = _cycle_entry(cur, verts[a - 1], verts[a]).sign()
            s_next = _cycle_entry(cur, verts[(a + 1) % p], verts[a]).sign()
            if s_prev != s_next:
                composable.append(verts[a])
            elif s_prev == 1:
                sinks.append(verts[a])
        if not composable:
            # directions alternate; mutating at a cycle sink flips its two
            # cycle arrows and creates a composable pair at a neighbour
            k = max(sinks)
            cur = mutate_matrix(cur, k)
            seq.append(k)
            continue
        k = composable[0]
        cur = mutate_matrix(cur, k)
        seq.append(k)
        if p == 3:
            break
        verts = [v for v in verts if v != k]
    if cur.is_pure():
        raise SemanticError("witness replay unexpectedly stayed pure")
    return seq
