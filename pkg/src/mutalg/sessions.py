"""Session state for the interactive explorer: replayable mutation history
plus the derived data panel (Cartan counterpart, Dynkin type, dangerous
cycles, root count, relation summary, companion basis).
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from typing import Optional

from .cartan import cartan_of_quiver
from .classes import dynkin_path, tree_equivalence_sequence
from .cycles import dangerous_cycles
from .diagram import DynkinType
from .errors import SemanticError
from .gss import mutate_sequence
from .presentation import all_relations
from .quiver import (
    SignedValuedQuiver,
    matrix_from_quiver,
    mutate_quiver,
    mutate_quiver_sequence,
    quiver_from_matrix,
)
from .roots import composite_rho_matrix, generate_root_system
from .serialize import gss_to_json, quiver_to_json


def all_negative(Q: SignedValuedQuiver) -> SignedValuedQuiver:
    return SignedValuedQuiver(
        Q.n,
        frozenset(a if a.sign == -1 else a.negate() for a in Q.arrows),
        Q.d,
    )


def dynkin_seed_route(
    Q: SignedValuedQuiver,
) -> Optional[tuple[DynkinType, SignedValuedQuiver, list[int]]]:
    """A canonical Dynkin embedding Q_seed (all arrows negative, tree shape)
    and a mutation sequence with mu_seq(Q_seed) = Q, when Q is mutation
    Dynkin.  Used to anchor companion bases for imported quivers."""
    B = matrix_from_quiver(Q)
    res = dynkin_path(B)
    if res is None:
        return None
    dynkin, sigma = res
    B0 = mutate_sequence(B, sigma)
    Q0 = quiver_from_matrix(B0)
    seed = all_negative(Q0)
    prefix = tree_equivalence_sequence(seed, Q0)
    back = [k for k in reversed(sigma) for _ in range(3)]
    seq = prefix + back
    if mutate_quiver_sequence(seed, seq).key() != Q.key():
        raise SemanticError("seed route replay failed")
    return dynkin, seed, seq


@dataclass
class Session:
    session_id: str
    initial: SignedValuedQuiver
    history: list[int] = field(default_factory=list)
    lock: threading.Lock = field(default_factory=threading.Lock, repr=False)
    dynkin: Optional[DynkinType] = None
    seed: Optional[SignedValuedQuiver] = None
    seed_sequence: Optional[list[int]] = None

    def __post_init__(self):
        route = dynkin_seed_route(self.initial)
        if route is not None:
            self.dynkin, self.seed, self.seed_sequence = route

    def current(self) -> SignedValuedQuiver:
        return mutate_quiver_sequence(self.initial, self.history)

    def mutate(self, k: int) -> SignedValuedQuiver:
        new = mutate_quiver(self.current(), k)
        self.history.append(k)
        return new

    def undo(self) -> SignedValuedQuiver:
        if not self.history:
            raise SemanticError("nothing to undo")
        self.history.pop()
        return self.current()


def relation_summary(Q: SignedValuedQuiver) -> dict:
    counts: dict[str, int] = {"R1": 0, "R2": 0, "R3": 0, "R4": 0, "R5": 0}
    for rel in all_relations(cartan_of_quiver(Q)):
        counts[rel.label[:2]] += 1
    counts["total"] = sum(counts.values())
    return counts


def session_state(session: Session) -> dict:
    Q = session.current()
    B = matrix_from_quiver(Q)
    C = cartan_of_quiver(Q)
    state: dict = {
        "id": session.session_id,
        "history": list(session.history),
        "quiver": quiver_to_json(Q),
        "matrix": gss_to_json(B),
        "cartan": [list(row) for row in C.entries],
        "d": list(Q.d),
        "dynkin": str(session.dynkin) if session.dynkin else None,
        "dangerous_cycles": [list(c.vertices) for c in dangerous_cycles(B)],
        "relation_summary": relation_summary(Q),
    }
    if session.dynkin is not None:
        rs = generate_root_system(C)
        state["root_count"] = len(rs.roots)
        seq = list(session.seed_sequence or []) + list(session.history)
        rho = composite_rho_matrix(session.seed, seq)
        n = Q.n
        state["companion_basis"] = [
            [rho[r][j] for r in range(n)] for j in range(n)
        ]
    else:
        state["root_count"] = None
        state["companion_basis"] = None
    return state
