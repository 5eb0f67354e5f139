"""Ideal presentations with cached Groebner data, the elimination oracle,
and combinatorial Krull dimension."""

from __future__ import annotations

import itertools
import threading

from .errors import NotHomogeneousError, SepelimError
from .groebner import GroebnerBasis, groebner_basis
from .orders import TermOrder, degrevlex, elimination_order
from .poly import Polynomial
from .rings import GradedRing


class IdealPresentation:
    """A finite generator tuple plus cached Groebner bases per term order.

    With homogeneous=True every generator must be W-homogeneous of positive
    degree, which certifies I \\cap P0 = {0}.  Zero generators are dropped.
    """

    def __init__(
        self,
        ring: GradedRing,
        generators,
        homogeneous: bool | None = None,
    ):
        self.ring = ring
        self.generators: tuple[Polynomial, ...] = tuple(
            g for g in generators if not g.is_zero()
        )
        for g in self.generators:
            if g.ring != ring:
                raise SepelimError("generator lives in a different ring")
        if homogeneous is None:
            homogeneous = all(
                g.is_w_homogeneous() and g.w_degree() > 0 for g in self.generators
            )
        elif homogeneous:
            for g in self.generators:
                if not g.is_w_homogeneous():
                    raise NotHomogeneousError(f"generator {g!r} is not W-homogeneous")
                if g.w_degree() <= 0:
                    raise NotHomogeneousError(
                        f"generator {g!r} does not have positive W-degree"
                    )
        self.homogeneous = homogeneous
        self._cache: dict[tuple, GroebnerBasis] = {}
        self._lock = threading.Lock()

    def __repr__(self):
        gens = ", ".join(repr(g) for g in self.generators)
        return f"<ideal ({gens}) of {self.ring!r}>"

    def groebner(self, order: TermOrder | None = None) -> GroebnerBasis:
        if order is None:
            order = degrevlex(self.ring.nvars)
        key = order.matrix
        with self._lock:
            gb = self._cache.get(key)
        if gb is None:
            gb = GroebnerBasis(self.ring, 1, [(g,) for g in self.generators], order)
            with self._lock:
                self._cache.setdefault(key, gb)
        return gb

    def normal_form(self, f: Polynomial, order: TermOrder | None = None) -> Polynomial:
        if not self.generators:
            return f
        return self.groebner(order).normal_form((f,))[0]

    def contains(self, f: Polynomial) -> bool:
        return self.normal_form(f).is_zero()

    def is_proper(self) -> bool:
        return not self.contains(self.ring.one())

    def is_zero_ideal(self) -> bool:
        return not self.generators


def ideal_equal(i1: IdealPresentation, i2: IdealPresentation) -> bool:
    """GB-certified equality: mutual normal-form membership of generators."""
    if i1.ring != i2.ring:
        raise SepelimError("ideals live in different rings")
    return all(i2.contains(g) for g in i1.generators) and all(
        i1.contains(g) for g in i2.generators
    )


def eliminate_oracle(
    ideal: IdealPresentation, z_indices: tuple[int, ...]
) -> IdealPresentation:
    """I \\cap K[X \\ Z] through an elimination ordering.

    This is the classical route; it is kept independent of the
    substitution-based elimination so the two can cross-check each other.
    """
    ring = ideal.ring
    if not z_indices:
        return ideal
    keep = tuple(i for i in range(ring.nvars) if i not in set(z_indices))
    target = ring.subring(keep)
    if not ideal.generators:
        return IdealPresentation(target, (), homogeneous=ideal.homogeneous)
    gb = ideal.groebner(elimination_order(ring, tuple(z_indices)))
    kept = []
    for (el,) in ((e[0],) for e in gb.elements):
        if not any(el.involves(i) for i in z_indices):
            kept.append(project_to_subring(el, target, keep))
    return IdealPresentation(target, kept, homogeneous=None)


def project_to_subring(
    f: Polynomial, target: GradedRing, keep: tuple[int, ...]
) -> Polynomial:
    """Rewrite f, supported on the kept variables, in the smaller ring."""
    out = {}
    for e, c in f.terms:
        if any(x > 0 for i, x in enumerate(e) if i not in keep):
            raise SepelimError("polynomial is not contained in the subring")
        out[tuple(e[i] for i in keep)] = c
    return target.poly(out)


def embed_from_subring(f: Polynomial, target: GradedRing, positions: tuple[int, ...]) -> Polynomial:
    """Inverse of project_to_subring: view a subring element in the big ring."""
    n = target.nvars
    out = {}
    for e, c in f.terms:
        big = [0] * n
        for i, x in zip(positions, e):
            big[i] = x
        out[tuple(big)] = c
    return target.poly(out)


def krull_dimension(ideal: IdealPresentation) -> int | None:
    """dim(P/I) via the leading-term ideal: the size of a maximal subset of
    indeterminates meeting no leading monomial's support.  Returns None for
    the unit ideal (empty scheme)."""
    ring = ideal.ring
    n = ring.nvars
    if not ideal.generators:
        return n
    gb = ideal.groebner()
    if gb.contains_unit:
        return None
    order = degrevlex(n)
    supports = []
    for (el,) in ((e[0],) for e in gb.elements):
        lt, _ = el.leading_term(order)
        supports.append(frozenset(i for i, x in enumerate(lt) if x > 0))
    for size in range(n, -1, -1):
        for combo in itertools.combinations(range(n), size):
            cset = set(combo)
            if all(not s <= cset for s in supports):
                return size
    return 0


def jacobian(ideal: IdealPresentation) -> list[list[Polynomial]]:
    """Rows indexed by generators, columns by all ring indeterminates."""
    return [
        [g.derivative(j) for j in range(ideal.ring.nvars)] for g in ideal.generators
    ]


def contains_one(gens: list[Polynomial], ring: GradedRing) -> bool:
    """1 \\in <gens>?  Uses the early unit exit of the engine."""
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return False
    gb = groebner_basis(gens, stop_on_unit=True)
    return gb.contains_unit
