"""Mutation classes: signed BFS enumeration, mutation-Dynkin recognition via
the unsigned class, tree reorientation/negation sequences, and an optional
canonical-labelling quotient.
"""

from __future__ import annotations

import os
from itertools import permutations
from typing import Optional

from .cartan import dynkin_quiver
from .cycles import dangerous_cycles
from .diagram import DynkinType, recognize_dynkin, unsigned_diagram
from .errors import BudgetExceededError, SemanticError
from .gss import GssMatrix, mutate_matrix
from .quiver import SignedValuedQuiver, matrix_from_quiver, quiver_from_matrix

DEFAULT_BUDGET = 10**6


def search_budget(budget: Optional[int] = None) -> int:
    if budget is not None:
        return budget
    env = os.environ.get("MUTALG_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


def fz_mutate(rows: tuple[tuple[int, ...], ...], k: int) -> tuple[tuple[int, ...], ...]:
    """Classical Fomin-Zelevinsky mutation of an integer matrix, 1-based k."""
    n = len(rows)
    kk = k - 1
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == kk or j == kk:
                row.append(-rows[i][j])
            elif rows[i][kk] * rows[kk][j] > 0:
                s = 1 if rows[i][kk] > 0 else -1
                row.append(rows[i][j] + s * rows[i][kk] * rows[kk][j])
            else:
                row.append(rows[i][j])
        out.append(tuple(row))
    return tuple(out)


def mutation_class_matrices(
    B: GssMatrix, budget: Optional[int] = None
) -> list[GssMatrix]:
    """BFS closure of {B} under signed mutation at every vertex.

    Finite for mutation Dynkin input; the budget caps exploration otherwise.
    Raises if a non-pure matrix appears (the class then has no quiver model).
    """
    cap = search_budget(budget)
    seen = {B.key(): B}
    frontier = [B]
    while frontier:
        nxt = []
        for cur in frontier:
            for k in range(1, cur.n + 1):
                new = mutate_matrix(cur, k)
                key = new.key()
                if key in seen:
                    continue
                if len(seen) >= cap:
                    raise BudgetExceededError("mutation class too large", len(seen))
                seen[key] = new
                nxt.append(new)
        frontier = nxt
    return list(seen.values())


def mutation_class(
    Q: SignedValuedQuiver,
    budget: Optional[int] = None,
    quotient: bool = False,
) -> list[SignedValuedQuiver]:
    """All signed valued quivers mutation equivalent to Q (labelled vertices).

    With quotient=True, one representative per relabelling orbit is kept,
    using a canonical form on (value, sign)-coloured digraphs.
    """
    mats = mutation_class_matrices(matrix_from_quiver(Q), budget)
    quivers = []
    for m in mats:
        if not m.is_pure():
            raise SemanticError(
                "mutation class left the pure locus; no quiver enumeration"
            )
        quivers.append(quiver_from_matrix(m))
    if not quotient:
        return sorted(quivers, key=lambda q: q.key())
    reps: dict[tuple, SignedValuedQuiver] = {}
    for q in quivers:
        reps.setdefault(canonical_key(q), q)
    return sorted(reps.values(), key=lambda q: q.key())


def canonical_key(Q: SignedValuedQuiver) -> tuple:
    """Canonical form under vertex relabelling: the minimum over admissible
    permutations of the labelled key.  Permutations must preserve the
    symmetrizer entry of each vertex (a relabelling invariant), which prunes
    the search sharply for the small ranks used here."""
    n = Q.n
    best: Optional[tuple] = None
    for perm in permutations(range(1, n + 1)):
        mapping = {old: new for old, new in zip(range(1, n + 1), perm)}
        # relabelling must transport the symmetrizer entry of each vertex
        if any(Q.d[old - 1] != Q.d[mapping[old] - 1] for old in mapping):
            continue
        key = (
            n,
            tuple(
                sorted(
                    (mapping[a.src], mapping[a.tgt], a.v1, a.v2)
                    for a in Q.arrows
                )
            ),
        )
        if best is None or key < best:
            best = key
    assert best is not None
    return best


def _unsigned_diagram_is_tree(rows: tuple[tuple[int, ...], ...]) -> bool:
    n = len(rows)
    edges = sum(
        1 for i in range(n) for j in range(i + 1, n) if rows[i][j] != 0
    )
    if edges != n - 1:
        return False
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in range(n):
            if w not in seen and rows[v][w] != 0:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


def classify_dynkin_specialization(
    rows: tuple[tuple[int, ...], ...],
    d: tuple[int, ...],
    budget: Optional[int] = None,
) -> Optional[DynkinType]:
    """Dynkin type of the unsigned mutation class of an integer matrix.

    Bounded BFS under FZ mutation; any member with |b_ij b_ji| >= 4
    certifies infinite type (2-finiteness) and returns None immediately.
    Tree-shaped members are classified through their valued diagram.
    """
    cap = search_budget(budget)
    n = len(rows)

    def two_infinite(m) -> bool:
        return any(
            abs(m[i][j] * m[j][i]) >= 4 for i in range(n) for j in range(i + 1, n)
        )

    def as_tree_type(m) -> Optional[DynkinType]:
        if not _unsigned_diagram_is_tree(m):
            return None
        emb = GssMatrix.t_embedding(m, d)
        return recognize_dynkin(unsigned_diagram(quiver_from_matrix(emb)))

    if two_infinite(rows):
        return None
    found = as_tree_type(rows)
    if found is not None:
        return found
    seen = {rows}
    frontier = [rows]
    while frontier:
        nxt = []
        for cur in frontier:
            for k in range(1, n + 1):
                new = fz_mutate(cur, k)
                if new in seen:
                    continue
                if two_infinite(new):
                    return None
                if len(seen) >= cap:
                    raise BudgetExceededError(
                        "unsigned class search exceeded budget", len(seen)
                    )
                seen.add(new)
                t = as_tree_type(new)
                if t is not None:
                    return t
                nxt.append(new)
        frontier = nxt
    return None


def is_mutation_dynkin(
    B: GssMatrix, budget: Optional[int] = None
) -> Optional[DynkinType]:
    """Dynkin type of the mutation class of B, or None.

    A gss matrix is mutation Dynkin exactly when it is pure, its
    specialization has Dynkin unsigned mutation type, and it carries no
    dangerous cycles.
    """
    if not B.is_pure():
        return None
    if dangerous_cycles(B):
        return None
    return classify_dynkin_specialization(B.specialize(), B.d, budget)


def dynkin_path(
    B: GssMatrix, budget: Optional[int] = None
) -> Optional[tuple[DynkinType, list[int]]]:
    """Like is_mutation_dynkin, but also returns a mutation sequence sending
    B to a tree-shaped (Dynkin diagram) member."""
    if not B.is_pure() or dangerous_cycles(B):
        return None
    cap = search_budget(budget)
    n = B.n
    rows = B.specialize()

    def two_infinite(m) -> bool:
        return any(
            abs(m[i][j] * m[j][i]) >= 4 for i in range(n) for j in range(i + 1, n)
        )

    def tree_type(m) -> Optional[DynkinType]:
        if not _unsigned_diagram_is_tree(m):
            return None
        emb = GssMatrix.t_embedding(m, B.d)
        return recognize_dynkin(unsigned_diagram(quiver_from_matrix(emb)))

    if two_infinite(rows):
        return None
    seen: dict[tuple, list[int]] = {rows: []}
    frontier = [rows]
    t = tree_type(rows)
    if t is not None:
        return (t, [])
    while frontier:
        nxt = []
        for cur in frontier:
            for k in range(1, n + 1):
                new = fz_mutate(cur, k)
                if new in seen:
                    continue
                if two_infinite(new):
                    return None
                if len(seen) >= cap:
                    raise BudgetExceededError(
                        "unsigned class search exceeded budget", len(seen)
                    )
                seen[new] = seen[cur] + [k]
                t = tree_type(new)
                if t is not None:
                    return (t, seen[new])
                nxt.append(new)
        frontier = nxt
    return None


def _tree_sides(Q: SignedValuedQuiver, src: int, tgt: int) -> list[int]:
    """Vertices whose path to src avoids tgt (the src side of the edge)."""
    adj: dict[int, set[int]] = {v: set() for v in range(1, Q.n + 1)}
    for a in Q.arrows:
        adj[a.src].add(a.tgt)
        adj[a.tgt].add(a.src)
    side = {src}
    stack = [src]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w != tgt and w not in side:
                side.add(w)
                stack.append(w)
    return sorted(side)


def _is_tree(Q: SignedValuedQuiver) -> bool:
    if len(Q.arrows) != Q.n - 1:
        return False
    adj: dict[int, set[int]] = {v: set() for v in range(1, Q.n + 1)}
    for a in Q.arrows:
        adj[a.src].add(a.tgt)
        adj[a.tgt].add(a.src)
    seen = {1}
    stack = [1]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == Q.n


def _source_order(Q: SignedValuedQuiver, side: list[int]) -> list[int]:
    """Topological order (sources first) of the restriction of Q to side."""
    side_set = set(side)
    indeg = {v: 0 for v in side}
    for a in Q.arrows:
        if a.src in side_set and a.tgt in side_set:
            indeg[a.tgt] += 1
    order = []
    ready = sorted(v for v in side if indeg[v] == 0)
    while ready:
        v = ready.pop(0)
        order.append(v)
        for a in sorted(Q.arrows_out_of(v), key=lambda x: x.tgt):
            if a.tgt in side_set:
                indeg[a.tgt] -= 1
                if indeg[a.tgt] == 0:
                    ready.append(a.tgt)
        ready.sort()
    if len(order) != len(side):
        raise SemanticError("restriction of a tree quiver must be acyclic")
    return order


def tree_equivalence_sequence(
    Q: SignedValuedQuiver, target: SignedValuedQuiver
) -> list[int]:
    """Mutation sequence carrying the tree quiver Q onto target, which must
    differ only by reversing and/or negating arrows.

    Reversal of an arrow alpha: u -> v applies source mutations along a
    topological order of the u-side; negation applies mu_k^2 over the side
    of the edge containing its source (the set P_-(alpha), split by path
    parity into commuting mu^2 blocks).
    """
    if not _is_tree(Q):
        raise SemanticError("tree equivalence requires a tree quiver")
    if Q.n != target.n or Q.d != target.d:
        raise SemanticError("quivers must share vertices and symmetrizer")
    for a in Q.arrows:
        b = target.arrow_between(a.src, a.tgt)
        if b is None:
            raise SemanticError("target must have the same underlying edges")
        allowed = {
            (a.src, a.tgt, a.v1, a.v2),
            (a.src, a.tgt, -a.v1, -a.v2),
            (a.tgt, a.src, a.v2, a.v1),
            (a.tgt, a.src, -a.v2, -a.v1),
        }
        if (b.src, b.tgt, b.v1, b.v2) not in allowed:
            raise SemanticError(
                f"edge {{{a.src},{a.tgt}}} differs by more than reverse/negate"
            )
    from .quiver import mutate_quiver

    seq: list[int] = []
    cur = Q
    # orientation phase: source mutations reverse one arrow at a time
    changed = True
    while changed:
        changed = False
        for a in sorted(cur.arrows, key=lambda x: (min(x.src, x.tgt), max(x.src, x.tgt))):
            t = target.arrow_between(a.src, a.tgt)
            if t.src == a.src:
                continue
            for v in _source_order(cur, _tree_sides(cur, a.src, a.tgt)):
                cur = mutate_quiver(cur, v)
                seq.append(v)
            changed = True
            break
    # sign phase: mu^2 products over P_-(alpha)
    for a in sorted(cur.arrows, key=lambda x: (min(x.src, x.tgt), max(x.src, x.tgt))):
        t = target.arrow_between(a.src, a.tgt)
        if t.v1 == a.v1:
            continue
        for v in _tree_sides(cur, a.src, a.tgt):
            cur = mutate_quiver(cur, v)
            cur = mutate_quiver(cur, v)
            seq.extend((v, v))
    if cur.key() != target.key():
        raise SemanticError("tree equivalence replay failed")
    return seq


def class_of_type(t: DynkinType, budget: Optional[int] = None) -> list[SignedValuedQuiver]:
    return mutation_class(dynkin_quiver(t), budget)
