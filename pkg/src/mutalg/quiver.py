"""Signed valued quivers, the quiver <-> matrix dictionary, and the
three-step graphical mutation rule.

Arrows carry an ordered value pair (v1, v2) with sgn(v1) = sgn(v2) != 0,
compatible with the symmetrizer: d_src * v1 = d_tgt * v2.  An arrow is
positive when v1 > 0.  All vertex labels are 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import PositiveThreeCycleViolation, SemanticError
from .gss import GssMatrix, find_symmetrizer
from .tring import TElem, ZERO, sgn


@dataclass(frozen=True, slots=True)
class Arrow:
    src: int
    tgt: int
    v1: int
    v2: int

    def __post_init__(self):
        if self.src == self.tgt:
            raise SemanticError("loops are not allowed")
        if sgn(self.v1) != sgn(self.v2) or self.v1 == 0:
            raise SemanticError(
                f"arrow value {self.value} must have equal nonzero signs"
            )

    @property
    def value(self) -> tuple[int, int]:
        return (self.v1, self.v2)

    @property
    def sign(self) -> int:
        return sgn(self.v1)

    @property
    def weight(self) -> int:
        return self.v1 * self.v2

    def reverse(self) -> "Arrow":
        return Arrow(self.tgt, self.src, self.v2, self.v1)

    def negate(self) -> "Arrow":
        return Arrow(self.src, self.tgt, -self.v1, -self.v2)

    def compose(self, other: "Arrow") -> "Arrow":
        """[alpha beta]: src(alpha) -> tgt(beta) with value (ac, bd)."""
        if self.tgt != other.src:
            raise SemanticError("arrows are not composable")
        return Arrow(self.src, other.tgt, self.v1 * other.v1, self.v2 * other.v2)

    def compare(self, other: "Arrow") -> str:
        """Trichotomy for antiparallel arrows: smaller/bigger/same/incomparable."""
        if self.src != other.tgt or self.tgt != other.src:
            raise SemanticError("comparability requires antiparallel arrows")
        a, b = self.v1, self.v2
        c, d = other.v1, other.v2
        if abs(a) < abs(d) and abs(b) < abs(c):
            return "smaller"
        if abs(a) > abs(d) and abs(b) > abs(c):
            return "bigger"
        if a == d and b == c:
            return "same"
        return "incomparable"


@dataclass(frozen=True, slots=True)
class SignedValuedQuiver:
    n: int
    arrows: frozenset[Arrow]
    d: tuple[int, ...]

    def __post_init__(self):
        if len(self.d) != self.n or any(x <= 0 for x in self.d):
            raise SemanticError("symmetrizer must be n positive integers")
        seen: set[frozenset[int]] = set()
        for a in self.arrows:
            if not (1 <= a.src <= self.n and 1 <= a.tgt <= self.n):
                raise SemanticError(f"arrow {a} out of vertex range")
            pair = frozenset((a.src, a.tgt))
            if pair in seen:
                raise SemanticError(
                    f"multiple arrows between {set(pair)}: quiver must be simple"
                )
            seen.add(pair)
            if self.d[a.src - 1] * a.v1 != self.d[a.tgt - 1] * a.v2:
                raise SemanticError(
                    f"arrow {a} incompatible with symmetrizer {self.d}"
                )

    @staticmethod
    def build(
        n: int, arrows: Iterable[tuple[int, int, int, int]],
        d: Optional[Sequence[int]] = None,
    ) -> "SignedValuedQuiver":
        arrs = frozenset(Arrow(*spec) for spec in arrows)
        if d is None:
            rows = _entry_rows(n, arrs)
            found = find_symmetrizer(rows)
            if found is None:
                raise SemanticError("arrows admit no positive symmetrizer")
            d = found
        return SignedValuedQuiver(n, arrs, tuple(d))

    def arrow_between(self, i: int, j: int) -> Optional[Arrow]:
        for a in self.arrows:
            if {a.src, a.tgt} == {i, j}:
                return a
        return None

    def arrows_into(self, k: int) -> list[Arrow]:
        return sorted(
            (a for a in self.arrows if a.tgt == k), key=lambda a: a.src
        )

    def arrows_out_of(self, k: int) -> list[Arrow]:
        return sorted(
            (a for a in self.arrows if a.src == k), key=lambda a: a.tgt
        )

    def key(self) -> tuple:
        return (
            self.n,
            tuple(sorted((a.src, a.tgt, a.v1, a.v2) for a in self.arrows)),
        )

    def relabel(self, perm: dict[int, int]) -> "SignedValuedQuiver":
        """Apply a vertex permutation {old: new}; the symmetrizer follows."""
        d = [0] * self.n
        for old, new in perm.items():
            d[new - 1] = self.d[old - 1]
        arrs = frozenset(
            Arrow(perm[a.src], perm[a.tgt], a.v1, a.v2) for a in self.arrows
        )
        return SignedValuedQuiver(self.n, arrs, tuple(d))

    def __str__(self) -> str:
        parts = [
            f"{a.src} -({a.v1},{a.v2})-> {a.tgt}"
            for a in sorted(self.arrows, key=lambda a: (a.src, a.tgt))
        ]
        return f"quiver on {self.n} vertices, d={list(self.d)}: " + "; ".join(parts)


def _entry_rows(n: int, arrows: frozenset[Arrow]) -> list[list[TElem]]:
    rows = [[ZERO for _ in range(n)] for _ in range(n)]
    for a in arrows:
        i, j = a.src - 1, a.tgt - 1
        if a.sign == 1:
            rows[i][j] = TElem(a.v1, 0)
            rows[j][i] = TElem(-a.v2, 0)
        else:
            rows[i][j] = TElem(0, -a.v1)
            rows[j][i] = TElem(0, a.v2)
    return rows


def matrix_from_quiver(Q: SignedValuedQuiver) -> GssMatrix:
    """Associated pure gss matrix: positive arrows give integer entries,
    negative arrows give t-multiples."""
    return GssMatrix.from_entries(_entry_rows(Q.n, Q.arrows), Q.d)


def quiver_from_matrix(B: GssMatrix) -> SignedValuedQuiver:
    """Associated signed valued quiver of a pure gss matrix: an arrow i -> j
    whenever sgn(b_ij) = 1, with value (b_ij(-1), -b_ji(-1))."""
    if not B.is_pure():
        raise SemanticError("only pure gss matrices correspond to quivers")
    arrows = []
    for i in range(1, B.n + 1):
        for j in range(1, B.n + 1):
            if B.entry(i, j).sign() == 1:
                arrows.append(
                    Arrow(i, j, B.entry(i, j).eval_at(-1), -B.entry(j, i).eval_at(-1))
                )
    return SignedValuedQuiver(B.n, frozenset(arrows), B.d)


def check_positive_3cycle(Q: SignedValuedQuiver, k: int) -> None:
    """Raise PositiveThreeCycleViolation if some path i -> k -> j together
    with an arrow between i and j has negative sign product."""
    if not 1 <= k <= Q.n:
        raise SemanticError(f"vertex {k} out of range 1..{Q.n}")
    for alpha in Q.arrows_into(k):
        for beta in Q.arrows_out_of(k):
            if alpha.src == beta.tgt:
                continue
            gamma = Q.arrow_between(alpha.src, beta.tgt)
            if gamma is not None and alpha.sign * beta.sign * gamma.sign != 1:
                raise PositiveThreeCycleViolation(alpha.src, beta.tgt, k)


def mutate_quiver(Q: SignedValuedQuiver, k: int) -> SignedValuedQuiver:
    """Three-step signed quiver mutation at k.

    Step 1: for each path i -> k -> j add -[alpha beta]: i -> j and negate
    any existing arrow between i and j.  Step 2: reverse arrows out of k,
    reverse and negate arrows into k.  Step 3: merge parallel pairs by value
    addition, after reverse-negating the smaller (or same size) arrow of an
    antiparallel pair; exact cancellation removes the arrow.
    """
    check_positive_3cycle(Q, k)
    incoming = Q.arrows_into(k)
    outgoing = Q.arrows_out_of(k)
    paths = [
        (alpha, beta)
        for alpha in incoming
        for beta in outgoing
        if alpha.src != beta.tgt
    ]
    touched = {frozenset((alpha.src, beta.tgt)) for alpha, beta in paths}

    new_arrows: list[Arrow] = []
    for a in Q.arrows:
        if a.tgt == k:
            new_arrows.append(a.reverse().negate())
        elif a.src == k:
            new_arrows.append(a.reverse())
        elif frozenset((a.src, a.tgt)) in touched:
            new_arrows.append(a.negate())
        else:
            new_arrows.append(a)

    pending: dict[frozenset[int], list[Arrow]] = {}
    for alpha, beta in paths:
        composite = alpha.compose(beta).negate()
        pending.setdefault(frozenset((alpha.src, beta.tgt)), []).append(composite)
    merged: list[Arrow] = []
    for a in new_arrows:
        pair = frozenset((a.src, a.tgt))
        if pair in pending:
            pending[pair].append(a)
        else:
            merged.append(a)
    for pair, pieces in pending.items():
        if len(pieces) == 1:
            merged.append(pieces[0])
            continue
        gamma, delta = pieces
        if gamma.src != delta.src:
            # antiparallel: fold the smaller or same-size arrow onto the other
            rel = delta.compare(gamma)
            if rel in ("smaller", "same"):
                delta = delta.reverse().negate()
            elif rel == "bigger":
                gamma = gamma.reverse().negate()
            else:
                raise SemanticError(
                    f"incomparable antiparallel arrows {gamma} and {delta}"
                )
        v1, v2 = gamma.v1 + delta.v1, gamma.v2 + delta.v2
        if v1 == 0 and v2 == 0:
            continue
        if v1 == 0 or v2 == 0 or sgn(v1) != sgn(v2):
            raise SemanticError("inconsistent arrow merge; input not mutable here")
        merged.append(Arrow(gamma.src, gamma.tgt, v1, v2))
    return SignedValuedQuiver(Q.n, frozenset(merged), Q.d)


def mutate_quiver_sequence(Q: SignedValuedQuiver, seq: Iterable[int]) -> SignedValuedQuiver:
    for k in seq:
        Q = mutate_quiver(Q, k)
    return Q
