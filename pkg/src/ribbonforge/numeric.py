"""Exact arithmetic over the rationals and the quadratic field Q(sqrt 2).

Every coordinate and length produced by the lattice constructions lives in
Q + Q*sqrt(2): centerlines are axis-aligned or diagonal, so edge lengths and
fold-line lengths never leave this field.  Comparisons are decided exactly
(integer arithmetic only); floats appear solely in reports.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

# Rational numbers are stdlib Fractions: arbitrary precision, always reduced,
# positive denominator.
Rational = Fraction

RationalLike = Union[Fraction, int]

SQRT2 = math.sqrt(2.0)


def as_rational(x: RationalLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def parse_rational(text: str) -> Fraction:
    """Parse 'p/q' or 'p' into a Fraction."""
    return Fraction(text.strip())


def format_rational(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)


@dataclass(frozen=True)
class ExactLength:
    """A number r + s*sqrt(2) with rational r, s.

    The representation is unique because sqrt(2) is irrational, so equality
    and sign tests are exact.
    """

    r: Fraction = Fraction(0)
    s: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "r", as_rational(self.r))
        object.__setattr__(self, "s", as_rational(self.s))

    # -- constructors ------------------------------------------------------

    @staticmethod
    def of(r: RationalLike, s: RationalLike = 0) -> "ExactLength":
        return ExactLength(as_rational(r), as_rational(s))

    @staticmethod
    def rational(r: RationalLike) -> "ExactLength":
        return ExactLength(as_rational(r), Fraction(0))

    @staticmethod
    def sqrt2_multiple(s: RationalLike) -> "ExactLength":
        return ExactLength(Fraction(0), as_rational(s))

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "ExactLength | RationalLike") -> "ExactLength":
        other = _coerce(other)
        return ExactLength(self.r + other.r, self.s + other.s)

    __radd__ = __add__

    def __sub__(self, other: "ExactLength | RationalLike") -> "ExactLength":
        other = _coerce(other)
        return ExactLength(self.r - other.r, self.s - other.s)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __neg__(self) -> "ExactLength":
        return ExactLength(-self.r, -self.s)

    def __mul__(self, other: "ExactLength | RationalLike") -> "ExactLength":
        other = _coerce(other)
        return ExactLength(
            self.r * other.r + 2 * self.s * other.s,
            self.r * other.s + self.s * other.r,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: "ExactLength | RationalLike") -> "ExactLength":
        other = _coerce(other)
        # (r + s*sqrt2) / (r' + s'*sqrt2): rationalize by the conjugate.
        norm = other.r * other.r - 2 * other.s * other.s
        if norm == 0:
            raise ZeroDivisionError("division by zero ExactLength")
        conj = ExactLength(other.r, -other.s)
        num = self * conj
        return ExactLength(num.r / norm, num.s / norm)

    def __rtruediv__(self, other):
        return _coerce(other) / self

    # -- exact comparisons -------------------------------------------------

    def sign(self) -> int:
        """Exact sign of r + s*sqrt(2), computed without floating point."""
        r, s = self.r, self.s
        if s == 0:
            return (r > 0) - (r < 0)
        if r == 0:
            return (s > 0) - (s < 0)
        if r > 0 and s > 0:
            return 1
        if r < 0 and s < 0:
            return -1
        # Opposite signs: compare r^2 with 2 s^2; value sign follows the
        # dominant term.
        lhs = r * r
        rhs = 2 * s * s
        if lhs == rhs:
            return 0  # impossible for r, s != 0 (sqrt2 irrational), kept for safety
        dominant_rational = lhs > rhs
        if dominant_rational:
            return 1 if r > 0 else -1
        return 1 if s > 0 else -1

    def is_zero(self) -> bool:
        return self.r == 0 and self.s == 0

    def __lt__(self, other):
        return (self - _coerce(other)).sign() < 0

    def __le__(self, other):
        return (self - _coerce(other)).sign() <= 0

    def __gt__(self, other):
        return (self - _coerce(other)).sign() > 0

    def __ge__(self, other):
        return (self - _coerce(other)).sign() >= 0

    def __eq__(self, other):
        if isinstance(other, (ExactLength, Fraction, int)):
            o = _coerce(other)
            return self.r == o.r and self.s == o.s
        return NotImplemented

    def __hash__(self):
        return hash((self.r, self.s))

    # -- reporting ---------------------------------------------------------

    def to_float(self) -> float:
        return float(self.r) + float(self.s) * SQRT2

    def __float__(self) -> float:
        return self.to_float()

    def as_json(self) -> dict:
        return {
            "r": format_rational(self.r),
            "s": format_rational(self.s),
            "approx": self.to_float(),
        }

    def __str__(self):
        if self.s == 0:
            return format_rational(self.r)
        s_part = f"{format_rational(self.s)}*sqrt2"
        if self.r == 0:
            return s_part
        joiner = "+" if self.s > 0 else ""
        return f"{format_rational(self.r)}{joiner}{s_part}"


def _coerce(x) -> ExactLength:
    if isinstance(x, ExactLength):
        return x
    if isinstance(x, (Fraction, int)):
        return ExactLength(as_rational(x), Fraction(0))
    raise TypeError(f"cannot coerce {type(x).__name__} to ExactLength")


def exact_cmp(a: ExactLength, b: ExactLength) -> int:
    """Exact order of two values: -1, 0 or +1.  Never uses floating point."""
    return (a - b).sign()


def to_float(a: ExactLength) -> float:
    """Nearest double of a; for reports and tolerance checks only."""
    return a.to_float()
