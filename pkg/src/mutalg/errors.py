"""Error hierarchy shared across the package.

Exit-code mapping used by the CLI: 0 ok, 2 parse, 3 semantic, 4 budget.
"""

from __future__ import annotations


class MutalgError(Exception):
    """Base class for all package errors."""

    exit_code = 3


class ParseError(MutalgError):
    """Malformed textual or JSON input."""

    exit_code = 2


class SemanticError(MutalgError):
    """Structurally valid input that violates a mathematical precondition."""

    exit_code = 3


class BudgetExceededError(MutalgError):
    """A bounded search ran past its node budget."""

    exit_code = 4

    def __init__(self, message: str, explored: int):
        super().__init__(f"{message} (explored {explored} nodes)")
        self.explored = explored


class PositiveThreeCycleViolation(SemanticError):
    """Quiver-level mutation blocked: sign product over a path i -> k -> j
    plus the arrow between i and j is negative.

    Carries the offending (i, j, k) triple, 1-based.
    """

    def __init__(self, i: int, j: int, k: int):
        super().__init__(
            f"positive 3-cycle condition fails at vertex {k}: "
            f"offending triple (i={i}, j={j}, k={k})"
        )
        self.triple = (i, j, k)
