"""Coefficient fields.

Coefficient values are plain Python objects with arithmetic operators
(Fraction for the rationals; PolyFraction, defined in fractionfield.py,
for fractions of polynomials).  A field object supplies the constants,
coercions and formatting that the generic polynomial code needs.
"""

from __future__ import annotations

from fractions import Fraction


class RationalField:
    """The field of exact rationals, realized by fractions.Fraction."""

    name = "Q"

    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, value):
        """Coerce an int, Fraction or string 'p/q' into a field element."""
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, str):
            return Fraction(value)
        raise TypeError(f"cannot coerce {value!r} into Q")

    def format(self, value: Fraction) -> str:
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"

    def is_negative_like(self, value: Fraction) -> bool:
        """True when the printer should render the value with a leading minus."""
        return value < 0

    def abs_like(self, value: Fraction) -> Fraction:
        return -value if value < 0 else value

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("sepelim.RationalField")

    def __repr__(self):
        return "QQ"


QQ = RationalField()
