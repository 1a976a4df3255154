"""Exact decimal values as (integer coefficient, base-10 exponent) pairs.

Floating point is never used on the encode/decode path; two values are equal
iff they are equal as rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NonValueTokenError


@dataclass(frozen=True, slots=True, eq=False)
class ExactValue:
    """The number ``coefficient * 10**exponent``, stored exactly."""

    coefficient: int
    exponent: int

    def normalized(self) -> tuple[int, int]:
        """Canonical (coefficient, exponent) with no trailing zero factors."""
        c, e = self.coefficient, self.exponent
        if c == 0:
            return (0, 0)
        while c % 10 == 0:
            c //= 10
            e += 1
        return (c, e)

    def as_fraction(self) -> Fraction:
        if self.exponent >= 0:
            return Fraction(self.coefficient * 10 ** self.exponent)
        return Fraction(self.coefficient, 10 ** -self.exponent)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ExactValue):
            return self.normalized() == other.normalized()
        if isinstance(other, int):
            return self.normalized() == ExactValue(other, 0).normalized()
        if isinstance(other, Fraction):
            return self.as_fraction() == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.normalized())

    def __repr__(self) -> str:
        return f"ExactValue({self.coefficient}, {self.exponent})"

    def __str__(self) -> str:
        c, e = self.coefficient, self.exponent
        if e >= 0:
            return str(c * 10 ** e)
        digits = str(abs(c)).rjust(-e + 1, "0")
        sign = "-" if c < 0 else ""
        return f"{sign}{digits[:e]}.{digits[e:]}"


def value_from_digits(int_digits: str, frac_digits: str, negative: bool = False) -> ExactValue:
    """Exact value of a plain decimal written as two digit strings."""
    coeff = int(int_digits + frac_digits) if (int_digits or frac_digits) else 0
    if negative:
        coeff = -coeff
    return ExactValue(coeff, -len(frac_digits))


def require_value(value: ExactValue | None, what: str) -> ExactValue:
    if value is None:
        raise NonValueTokenError(f"{what} carries no numeric value")
    return value
