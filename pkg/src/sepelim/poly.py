"""Exact multivariate polynomials with dense exponent-vector terms.

A polynomial stores its nonzero terms as a tuple of (exponents, coefficient)
pairs, sorted by a fixed internal degrevlex so that printing and iteration
are deterministic.  Coefficients live in the ring's field and only need the
usual arithmetic operators.
"""

from __future__ import annotations

from .errors import NotHomogeneousError, ZeroPolynomialError
from .orders import TermOrder
from .rings import GradedRing

Exps = tuple[int, ...]


def grevlex_key(exps: Exps) -> tuple[int, ...]:
    return (sum(exps),) + tuple(-e for e in reversed(exps))


class Polynomial:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: GradedRing, coeffs: dict):
        zero = ring.coeff_field.zero
        cleaned = {e: c for e, c in coeffs.items() if c != zero}
        for e in cleaned:
            if len(e) != ring.nvars:
                raise ValueError("exponent vector length does not match the ring")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(
            self,
            "terms",
            tuple(sorted(cleaned.items(), key=lambda t: grevlex_key(t[0]), reverse=True)),
        )

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ring.names, self.ring.weights, self.terms))

    def support(self) -> tuple[Exps, ...]:
        return tuple(e for e, _ in self.terms)

    def coefficient(self, exps: Exps):
        for e, c in self.terms:
            if e == exps:
                return c
        return self.ring.coeff_field.zero

    def constant_term(self):
        return self.coefficient((0,) * self.ring.nvars)

    def num_terms(self) -> int:
        return len(self.terms)

    # -- arithmetic ----------------------------------------------------------

    def _coeff_dict(self) -> dict:
        return dict(self.terms)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check_ring(other)
        out = self._coeff_dict()
        zero = self.ring.coeff_field.zero
        for e, c in other.terms:
            out[e] = out.get(e, zero) + c
        return Polynomial(self.ring, out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        self._check_ring(other)
        out = self._coeff_dict()
        zero = self.ring.coeff_field.zero
        for e, c in other.terms:
            out[e] = out.get(e, zero) - c
        return Polynomial(self.ring, out)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.ring, {e: -c for e, c in self.terms})

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check_ring(other)
        if not self.terms or not other.terms:
            return self.ring.zero()
        out: dict = {}
        zero = self.ring.coeff_field.zero
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, zero) + c1 * c2
        return Polynomial(self.ring, out)

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative exponent")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def scale(self, c) -> "Polynomial":
        c = self.ring.coeff_field.coerce(c)
        if c == self.ring.coeff_field.zero:
            return self.ring.zero()
        return Polynomial(self.ring, {e: c * v for e, v in self.terms})

    def mul_term(self, exps: Exps, coeff) -> "Polynomial":
        if coeff == self.ring.coeff_field.zero:
            return self.ring.zero()
        return Polynomial(
            self.ring,
            {tuple(a + b for a, b in zip(e, exps)): c * coeff for e, c in self.terms},
        )

    def _check_ring(self, other: "Polynomial"):
        if self.ring != other.ring:
            raise ValueError("polynomials live in different rings")

    # -- leading data ---------------------------------------------------------

    def leading_term(self, order: TermOrder) -> tuple[Exps, object]:
        if not self.terms:
            raise ZeroPolynomialError("zero polynomial has no leading term")
        return max(self.terms, key=lambda t: order.key(t[0]))

    # -- grading ---------------------------------------------------------------

    def term_w_degree(self, exps: Exps) -> int:
        return sum(w * e for w, e in zip(self.ring.weights, exps))

    def w_degree(self) -> int:
        """W-degree of a nonzero W-homogeneous polynomial."""
        if not self.terms:
            raise ZeroPolynomialError("zero polynomial has no W-degree")
        degs = {self.term_w_degree(e) for e, _ in self.terms}
        if len(degs) > 1:
            raise NotHomogeneousError(
                f"not homogeneous: W-degrees {sorted(degs)} occur"
            )
        return degs.pop()

    def is_w_homogeneous(self) -> bool:
        return len({self.term_w_degree(e) for e, _ in self.terms}) <= 1

    def homogeneous_components(self) -> list[tuple[int, "Polynomial"]]:
        """Split into W-homogeneous components, degrees strictly increasing."""
        buckets: dict[int, dict] = {}
        for e, c in self.terms:
            buckets.setdefault(self.term_w_degree(e), {})[e] = c
        return [(d, Polynomial(self.ring, buckets[d])) for d in sorted(buckets)]

    def homogeneous_component(self, degree: int) -> "Polynomial":
        picked = {e: c for e, c in self.terms if self.term_w_degree(e) == degree}
        return Polynomial(self.ring, picked)

    def std_degree(self) -> int:
        """Total degree in the standard grading (all weights 1); zero -> -1."""
        if not self.terms:
            return -1
        return max(sum(e) for e, _ in self.terms)

    def linear_part(self) -> "Polynomial":
        """Terms of standard degree 1 (used for Lin w.r.t. the irrelevant ideal)."""
        return Polynomial(self.ring, {e: c for e, c in self.terms if sum(e) == 1})

    # -- calculus / substitution -----------------------------------------------

    def derivative(self, i: int) -> "Polynomial":
        out: dict = {}
        zero = self.ring.coeff_field.zero
        for e, c in self.terms:
            if e[i] == 0:
                continue
            d = list(e)
            d[i] -= 1
            key = tuple(d)
            out[key] = out.get(key, zero) + c * self.ring.coeff_field.coerce(e[i])
        return Polynomial(self.ring, out)

    def involves(self, i: int) -> bool:
        return any(e[i] > 0 for e, _ in self.terms)

    def variables(self) -> tuple[int, ...]:
        used = set()
        for e, _ in self.terms:
            used.update(i for i, x in enumerate(e) if x > 0)
        return tuple(sorted(used))

    def __repr__(self):
        from .textio import format_polynomial

        return format_polynomial(self)


def map_polynomial(
    f: Polynomial,
    target: GradedRing,
    images: list[Polynomial],
    coeff_map=None,
) -> Polynomial:
    """Apply the ring homomorphism sending variable i to images[i].

    coeff_map converts source coefficients into target coefficients
    (identity by default).
    """
    if len(images) != f.ring.nvars:
        raise ValueError("one image per source indeterminate is required")
    if coeff_map is None:
        coeff_map = target.coeff_field.coerce
    result = target.zero()
    powers: dict[tuple[int, int], Polynomial] = {}

    def power(i, k):
        if (i, k) not in powers:
            powers[(i, k)] = images[i] ** k
        return powers[(i, k)]

    for e, c in f.terms:
        term = target.const(coeff_map(c))
        for i, k in enumerate(e):
            if k:
                term = term * power(i, k)
        result = result + term
    return result


def substitute(f: Polynomial, assignment: dict[int, Polynomial]) -> Polynomial:
    """Substitute polynomials (same ring) for selected variables."""
    images = [assignment.get(i, f.ring.var(i)) for i in range(f.ring.nvars)]
    return map_polynomial(f, f.ring, images, coeff_map=lambda c: c)
