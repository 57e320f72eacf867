"""Fixed-point money with four fractional digits.

Values are stored as integer minor units (1 unit = 0.0001), so sums and
comparisons are exact. Division results are carried as ``Fraction`` and
brought back with :meth:`Money.from_fraction`, which rounds half-up.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, InvalidOperation
from fractions import Fraction
from functools import total_ordering

DIGITS = 4
SCALE = 10**DIGITS


class MoneyFormatError(ValueError):
    """Raised when a literal cannot be represented with four decimal digits."""


def _round_half_up(value: Fraction) -> int:
    # ties go away from zero on both sides
    if value >= 0:
        return int((value + Fraction(1, 2)) // 1)
    return -int((-value + Fraction(1, 2)) // 1)


@total_ordering
@dataclass(frozen=True, slots=True)
class Money:
    units: int

    @classmethod
    def parse(cls, value: str | int | float | Decimal) -> Money:
        """Parse a decimal literal, rejecting anything finer than 0.0001."""
        if isinstance(value, bool):
            raise MoneyFormatError(f"not a number: {value!r}")
        if isinstance(value, int):
            return cls(value * SCALE)
        if isinstance(value, float):
            value = repr(value)
        try:
            dec = Decimal(value.replace(",", ".") if isinstance(value, str) else value)
        except (InvalidOperation, TypeError) as exc:
            raise MoneyFormatError(f"not a decimal literal: {value!r}") from exc
        if not dec.is_finite():
            raise MoneyFormatError(f"not finite: {value!r}")
        scaled = dec * SCALE
        if scaled != scaled.to_integral_value():
            raise MoneyFormatError(f"more than {DIGITS} fractional digits: {value!r}")
        return cls(int(scaled))

    @classmethod
    def from_fraction(cls, value: Fraction) -> Money:
        return cls(_round_half_up(value * SCALE))

    @classmethod
    def exact(cls, value: Fraction) -> Money:
        """Like :meth:`from_fraction` but refuses to round."""
        scaled = value * SCALE
        if scaled.denominator != 1:
            raise MoneyFormatError(f"{value} is not representable in {DIGITS} digits")
        return cls(scaled.numerator)

    def as_fraction(self) -> Fraction:
        return Fraction(self.units, SCALE)

    def as_decimal(self) -> Decimal:
        return (Decimal(self.units) / SCALE).normalize()

    def __add__(self, other: Money) -> Money:
        if not isinstance(other, Money):
            return NotImplemented
        return Money(self.units + other.units)

    def __sub__(self, other: Money) -> Money:
        if not isinstance(other, Money):
            return NotImplemented
        return Money(self.units - other.units)

    def __neg__(self) -> Money:
        return Money(-self.units)

    def __mul__(self, factor: int) -> Money:
        if isinstance(factor, bool) or not isinstance(factor, int):
            return NotImplemented
        return Money(self.units * factor)

    __rmul__ = __mul__

    def __lt__(self, other: Money) -> bool:
        if not isinstance(other, Money):
            return NotImplemented
        return self.units < other.units

    def __str__(self) -> str:
        sign = "-" if self.units < 0 else ""
        whole, frac = divmod(abs(self.units), SCALE)
        if frac == 0:
            return f"{sign}{whole}"
        return f"{sign}{whole}.{frac:0{DIGITS}d}".rstrip("0")

    def __repr__(self) -> str:
        return f"Money('{self}')"

    def to_json(self) -> int | float:
        """Shortest JSON number that parses back to the same value."""
        if self.units % SCALE == 0:
            return self.units // SCALE
        return float(str(self))


ZERO = Money(0)
