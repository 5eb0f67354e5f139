"""Graded polynomial ring descriptions.

A GradedRing fixes an ordered tuple of indeterminate names, a row of
non-negative integer weights, and a coefficient field.  Weight-0
indeterminates form the degree-0 block (the subring P0); the rest form
the positive block.  Rings are immutable values; polynomials hold a
reference to their ring.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .coeffs import QQ


@dataclass(frozen=True)
class GradedRing:
    names: tuple[str, ...]
    weights: tuple[int, ...]
    coeff_field: object = field(default=QQ)

    def __post_init__(self):
        if len(self.names) != len(self.weights):
            raise ValueError("weight row length must equal the number of indeterminates")
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate indeterminate names")
        if any(w < 0 for w in self.weights):
            raise ValueError("weights must be non-negative")

    # -- structure --------------------------------------------------------

    @property
    def nvars(self) -> int:
        return len(self.names)

    @property
    def zero_block(self) -> tuple[int, ...]:
        """Indices of the weight-0 indeterminates (the a-variables)."""
        return tuple(i for i, w in enumerate(self.weights) if w == 0)

    @property
    def pos_block(self) -> tuple[int, ...]:
        """Indices of the positive-weight indeterminates."""
        return tuple(i for i, w in enumerate(self.weights) if w > 0)

    @property
    def is_positive(self) -> bool:
        return all(w > 0 for w in self.weights)

    def index_of(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown indeterminate {name!r}") from None

    # -- element constructors ---------------------------------------------

    def poly(self, coeffs: dict):
        from .poly import Polynomial

        return Polynomial(self, coeffs)

    def zero(self):
        return self.poly({})

    def one(self):
        return self.const(self.coeff_field.one)

    def const(self, value):
        c = self.coeff_field.coerce(value)
        if c == self.coeff_field.zero:
            return self.zero()
        return self.poly({(0,) * self.nvars: c})

    def var(self, i: int):
        e = [0] * self.nvars
        e[i] = 1
        return self.poly({tuple(e): self.coeff_field.one})

    def var_named(self, name: str):
        return self.var(self.index_of(name))

    # -- derived rings ------------------------------------------------------

    def subring(self, keep: tuple[int, ...], coeff_field=None, weights=None) -> "GradedRing":
        """Ring on the kept indeterminates (same order), default same weights."""
        if weights is None:
            weights = tuple(self.weights[i] for i in keep)
        return GradedRing(
            tuple(self.names[i] for i in keep),
            weights,
            self.coeff_field if coeff_field is None else coeff_field,
        )

    def degree_zero_subring(self) -> "GradedRing":
        """P0 = K[a_1,...,a_m] as a standalone ring (weights stay 0)."""
        return self.subring(self.zero_block)

    def __repr__(self):
        ws = ",".join(str(w) for w in self.weights)
        return f"{self.coeff_field.name}[{','.join(self.names)}; W=({ws})]"
