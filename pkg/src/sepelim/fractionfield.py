"""Fractions of polynomials: the field L = K(a_1,...,a_m).

A PolyFraction keeps a numerator and denominator over a fixed parameter
ring in canonical form: the pair is coprime (gcd divided out) and the
denominator is monic w.r.t. the internal degrevlex, so equality is
structural.
"""

from __future__ import annotations

from .groebner import poly_exact_div, poly_gcd, _monic
from .orders import degrevlex
from .poly import Polynomial
from .rings import GradedRing


class PolyFraction:
    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial, den: Polynomial, _canonical: bool = False):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if not _canonical:
            num, den = _canonicalize(num, den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("PolyFraction is immutable")

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def __eq__(self, other):
        if isinstance(other, int):
            ring = self.num.ring
            other = PolyFraction(ring.const(other), ring.one())
        if not isinstance(other, PolyFraction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other: "PolyFraction") -> "PolyFraction":
        return PolyFraction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    def __sub__(self, other: "PolyFraction") -> "PolyFraction":
        return PolyFraction(
            self.num * other.den - other.num * self.den, self.den * other.den
        )

    def __neg__(self) -> "PolyFraction":
        return PolyFraction(-self.num, self.den, _canonical=True)

    def __mul__(self, other: "PolyFraction") -> "PolyFraction":
        return PolyFraction(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "PolyFraction") -> "PolyFraction":
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero fraction")
        return PolyFraction(self.num * other.den, self.den * other.num)

    def __repr__(self):
        from .textio import format_polynomial

        if self.den == self.num.ring.one():
            return f"({format_polynomial(self.num)})"
        return f"({format_polynomial(self.num)})/({format_polynomial(self.den)})"


def _canonicalize(num: Polynomial, den: Polynomial) -> tuple[Polynomial, Polynomial]:
    ring = num.ring
    if num.is_zero():
        return ring.zero(), ring.one()
    g = poly_gcd(num, den)
    if g.std_degree() > 0:
        num = poly_exact_div(num, g)
        den = poly_exact_div(den, g)
    order = degrevlex(ring.nvars)
    _, lc = den.leading_term(order)
    one = ring.coeff_field.one
    if lc != one:
        inv = one / lc
        num = num.scale(inv)
        den = den.scale(inv)
    return num, den


class PolyFractionField:
    """The fraction field of a polynomial ring over the rationals."""

    def __init__(self, param_ring: GradedRing):
        self.param_ring = param_ring
        self.name = f"Frac({','.join(param_ring.names)})"
        self.zero = PolyFraction(param_ring.zero(), param_ring.one(), _canonical=True)
        self.one = PolyFraction(param_ring.one(), param_ring.one(), _canonical=True)

    def coerce(self, value) -> PolyFraction:
        if isinstance(value, PolyFraction):
            return value
        if isinstance(value, Polynomial):
            return PolyFraction(value, self.param_ring.one())
        return PolyFraction(self.param_ring.const(value), self.param_ring.one())

    def from_param(self, p: Polynomial) -> PolyFraction:
        return PolyFraction(p, self.param_ring.one())

    def format(self, value: PolyFraction) -> str:
        from .textio import format_polynomial

        num = format_polynomial(value.num)
        if value.den == self.param_ring.one():
            if value.num.num_terms() <= 1:
                return num
            return f"({num})"
        return f"({num})/({format_polynomial(value.den)})"

    def is_negative_like(self, value: PolyFraction) -> bool:
        if value.num.is_zero():
            return False
        order = degrevlex(self.param_ring.nvars)
        _, lc = value.num.leading_term(order)
        return lc < 0

    def abs_like(self, value: PolyFraction) -> PolyFraction:
        return -value if self.is_negative_like(value) else value

    def __eq__(self, other):
        return (
            isinstance(other, PolyFractionField)
            and self.param_ring == other.param_ring
        )

    def __hash__(self):
        return hash(("sepelim.PolyFractionField", self.param_ring.names))

    def __repr__(self):
        return self.name


__all__ = ["PolyFraction", "PolyFractionField", "_monic"]
