"""The coefficient ring Z[t]/(t^2 - 1).

Elements are written a + b*t with integer a, b and multiply with t^2 = 1.
The sign of a + b*t is defined as sgn(a + b); it is multiplicative and
invariant under multiplication by t, which is what makes signed mutation
well behaved.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParseError


def sgn(x: int) -> int:
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


@dataclass(frozen=True, slots=True)
class TElem:
    """An element a + b*t of Z[t]/(t^2 - 1)."""

    a: int = 0
    b: int = 0

    def __add__(self, other: "TElem") -> "TElem":
        return TElem(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "TElem") -> "TElem":
        return TElem(self.a - other.a, self.b - other.b)

    def __neg__(self) -> "TElem":
        return TElem(-self.a, -self.b)

    def __mul__(self, other: "TElem") -> "TElem":
        # (a1 + b1 t)(a2 + b2 t) = (a1 a2 + b1 b2) + (a1 b2 + a2 b1) t
        return TElem(
            self.a * other.a + self.b * other.b,
            self.a * other.b + other.a * self.b,
        )

    def times_t(self) -> "TElem":
        return TElem(self.b, self.a)

    def scale(self, c: int) -> "TElem":
        return TElem(c * self.a, c * self.b)

    def eval_at(self, s: int) -> int:
        """Evaluate at t = s; only s = 1 and s = -1 are ring homomorphisms."""
        if s not in (1, -1):
            raise ValueError("evaluation point must be 1 or -1")
        return self.a + self.b * s

    def sign(self) -> int:
        """sgn(a + b t) := sgn(a + b)."""
        return sgn(self.a + self.b)

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_int(self) -> bool:
        """Lies in Z (no t part)."""
        return self.b == 0

    def is_t_multiple(self) -> bool:
        """Lies in tZ (no constant part)."""
        return self.a == 0

    def is_pure(self) -> bool:
        """Lies in Z or in tZ, never mixed."""
        return self.a == 0 or self.b == 0

    def divisible_by(self, c: int) -> bool:
        return self.a % c == 0 and self.b % c == 0

    def divide_exact(self, c: int) -> "TElem":
        if not self.divisible_by(c):
            raise ValueError(f"{self} not divisible by {c}")
        return TElem(self.a // c, self.b // c)

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        if self.b == 0:
            return str(self.a)
        tpart = "t" if self.b == 1 else "-t" if self.b == -1 else f"{self.b}t"
        if self.a == 0:
            return tpart
        joiner = "+" if self.b > 0 else ""
        return f"{self.a}{joiner}{tpart}"


ZERO = TElem(0, 0)
ONE = TElem(1, 0)
T = TElem(0, 1)


def t_sign(x: TElem) -> int:
    return x.sign()


def parse_telem(text: str) -> TElem:
    """Parse strings like "0", "-2", "t", "-t", "3t", "-1+t", "2-3t"."""
    s = text.strip().replace(" ", "")
    if not s:
        raise ParseError("empty ring element")
    # split into at most two signed monomials
    chunks: list[str] = []
    cur = ""
    for idx, ch in enumerate(s):
        if ch in "+-" and idx > 0:
            chunks.append(cur)
            cur = ch
        else:
            cur += ch
    chunks.append(cur)
    if len(chunks) > 2:
        raise ParseError(f"cannot parse ring element {text!r}")
    a = b = 0
    seen_a = seen_b = False
    for chunk in chunks:
        if chunk.endswith("t"):
            if seen_b:
                raise ParseError(f"repeated t term in {text!r}")
            coeff = chunk[:-1]
            if coeff in ("", "+"):
                b = 1
            elif coeff == "-":
                b = -1
            else:
                try:
                    b = int(coeff)
                except ValueError as exc:
                    raise ParseError(f"cannot parse ring element {text!r}") from exc
            seen_b = True
        else:
            if seen_a:
                raise ParseError(f"repeated constant term in {text!r}")
            try:
                a = int(chunk)
            except ValueError as exc:
                raise ParseError(f"cannot parse ring element {text!r}") from exc
            seen_a = True
    return TElem(a, b)
