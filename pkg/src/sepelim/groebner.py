"""Buchberger engine for ideals and submodules of free modules.

Elements of a free module P^s are handled uniformly as dictionaries
mapping module monomials (component, exponent vector) to coefficients;
an ideal is the  s = 1  case.  The module ordering is position-over-term
with lower component preferred and the supplied term ordering inside a
component.

The engine tracks representations, so every basis element comes with an
exact lift in terms of the input generators, and lifting a member of the
module through the basis is exact as well (re-expansion is always
checked).  Pair pruning follows Gebauer-Moeller; the product criterion is
applied only in the ideal case, where it is valid.
"""

from __future__ import annotations

from .errors import MembershipError, SepelimError
from .orders import TermOrder, degrevlex, elimination_order
from .poly import Polynomial
from .rings import GradedRing

ModMono = tuple[int, tuple[int, ...]]
Vec = tuple[Polynomial, ...]


# ---------------------------------------------------------------------------
# internal vector-polynomial helpers (dict of module monomial -> coefficient)
# ---------------------------------------------------------------------------


def _vp_from_vec(vec: Vec) -> dict:
    vp: dict = {}
    for comp, p in enumerate(vec):
        for e, c in p.terms:
            vp[(comp, e)] = c
    return vp


def _vp_to_vec(vp: dict, ring: GradedRing, ncomps: int) -> Vec:
    buckets: list[dict] = [{} for _ in range(ncomps)]
    for (comp, e), c in vp.items():
        buckets[comp][e] = c
    return tuple(ring.poly(b) for b in buckets)


def _vp_sub_scaled(target: dict, source: dict, shift: tuple[int, ...], coeff, zero):
    """target -= coeff * x^shift * source, in place."""
    for (comp, e), c in source.items():
        key = (comp, tuple(a + b for a, b in zip(e, shift)))
        v = target.get(key, zero) - coeff * c
        if v == zero:
            target.pop(key, None)
        else:
            target[key] = v


def _poly_sub_scaled(target: dict, source: dict, shift: tuple[int, ...], coeff, zero):
    """Same as _vp_sub_scaled for scalar polynomials stored as dicts."""
    for e, c in source.items():
        key = tuple(a + b for a, b in zip(e, shift))
        v = target.get(key, zero) - coeff * c
        if v == zero:
            target.pop(key, None)
        else:
            target[key] = v


def _divides(e1: tuple[int, ...], e2: tuple[int, ...]) -> bool:
    return all(a <= b for a, b in zip(e1, e2))


class _ModKey:
    """Position-over-term key; max() under this key is the leading monomial."""

    def __init__(self, order: TermOrder):
        self.order = order

    def __call__(self, m: ModMono):
        comp, e = m
        return (-comp, self.order.key(e))


# ---------------------------------------------------------------------------
# the engine
# ---------------------------------------------------------------------------


class GroebnerBasis:
    """Reduced monic Groebner basis of a submodule of P^ncomps with lifts.

    The basis is deterministic for a fixed generator order: normal pair
    selection, fixed reducer choice, final sort by ascending leading
    monomial.
    """

    def __init__(
        self,
        ring: GradedRing,
        ncomps: int,
        gens: list[Vec],
        order: TermOrder | None = None,
        stop_on_unit: bool = False,
    ):
        self.ring = ring
        self.ncomps = ncomps
        self.order = order if order is not None else degrevlex(ring.nvars)
        self.mkey = _ModKey(self.order)
        self.gens = [tuple(g) for g in gens]
        self.contains_unit = False
        self._run(stop_on_unit)

    # -- construction -------------------------------------------------------

    def _run(self, stop_on_unit: bool):
        field = self.ring.coeff_field
        zero, one = field.zero, field.one
        nv = self.ring.nvars

        work: list[dict] = []      # monic basis elements
        lts: list[ModMono] = []
        reps: list[list[dict]] = []  # rep[i][j]: poly dict with elem_i = sum rep[i][j]*gens[j]

        def insert(vp: dict, rep: list[dict]) -> int:
            lt = max(vp, key=self.mkey)
            lc = vp[lt]
            if lc != one:
                inv = one / lc
                vp = {m: c * inv for m, c in vp.items()}
                rep = [{e: c * inv for e, c in r.items()} for r in rep]
            work.append(vp)
            lts.append(lt)
            reps.append(rep)
            return len(work) - 1

        def reduce_full(vp: dict) -> tuple[dict, list[dict]]:
            rem: dict = {}
            cur = dict(vp)
            qs: list[dict] = [dict() for _ in work]
            while cur:
                m = max(cur, key=self.mkey)
                c = cur[m]
                comp, e = m
                hit = None
                for i, (lcomp, le) in enumerate(lts):
                    if lcomp == comp and _divides(le, e):
                        hit = i
                        break
                if hit is None:
                    rem[m] = c
                    del cur[m]
                    continue
                shift = tuple(a - b for a, b in zip(e, lts[hit][1]))
                q = qs[hit]
                q[shift] = q.get(shift, zero) + c
                _vp_sub_scaled(cur, work[hit], shift, c, zero)
            return rem, qs

        def combine_rep(qs: list[dict]) -> list[dict]:
            out = [dict() for _ in self.gens]
            for i, q in enumerate(qs):
                if not q:
                    continue
                for j, rj in enumerate(reps[i]):
                    if not rj:
                        continue
                    acc = out[j]
                    for shift, c in q.items():
                        _poly_sub_scaled(acc, rj, shift, -c, zero)
            return out

        pairs: list[tuple[int, int]] = []

        def lcm_of(i: int, j: int) -> ModMono:
            (c1, e1), (c2, e2) = lts[i], lts[j]
            return (c1, tuple(max(a, b) for a, b in zip(e1, e2)))

        def update_pairs(h: int):
            # Gebauer-Moeller: prune new pairs by the M/F criteria, old pairs
            # by the B criterion; the product criterion only applies to ideals.
            cand = [g for g in range(h) if lts[g][0] == lts[h][0]]
            kept: list[int] = []
            for g1 in cand:
                l1 = lcm_of(g1, h)
                drop = False
                for g2 in cand:
                    if g2 == g1:
                        continue
                    l2 = lcm_of(g2, h)
                    if l2 != l1 and _divides(l2[1], l1[1]):
                        drop = True
                        break
                if not drop:
                    kept.append(g1)
            seen_lcms: list[ModMono] = []
            final: list[int] = []
            for g1 in kept:
                l1 = lcm_of(g1, h)
                if l1 in seen_lcms:
                    continue
                seen_lcms.append(l1)
                final.append(g1)
            if self.ncomps == 1:
                final = [
                    g1
                    for g1 in final
                    if lcm_of(g1, h)[1]
                    != tuple(a + b for a, b in zip(lts[g1][1], lts[h][1]))
                ]
            survivors = []
            for (i, j) in pairs:
                lij = lcm_of(i, j)
                if lts[h][0] != lij[0] or not _divides(lts[h][1], lij[1]):
                    survivors.append((i, j))
                    continue
                if lcm_of(i, h) == lij or lcm_of(j, h) == lij:
                    survivors.append((i, j))
            pairs.clear()
            pairs.extend(survivors)
            pairs.extend((g1, h) for g1 in final)

        unit_reached = False
        for j, g in enumerate(self.gens):
            vp = _vp_from_vec(g)
            if not vp:
                continue
            rep = [dict() for _ in self.gens]
            rep[j] = {(0,) * nv: one}
            idx = insert(vp, rep)
            update_pairs(idx)
            if stop_on_unit and self.ncomps == 1 and lts[idx] == (0, (0,) * nv):
                unit_reached = True
                break

        while pairs and not unit_reached:
            best = min(
                pairs, key=lambda ij: (self.mkey(lcm_of(ij[0], ij[1])), ij[0], ij[1])
            )
            pairs.remove(best)
            i, j = best
            lcomp, le = lcm_of(i, j)
            si = tuple(a - b for a, b in zip(le, lts[i][1]))
            sj = tuple(a - b for a, b in zip(le, lts[j][1]))
            s: dict = {}
            _vp_sub_scaled(s, work[i], si, -one, zero)
            _vp_sub_scaled(s, work[j], sj, one, zero)
            if not s:
                continue
            rem, qs = reduce_full(s)
            if not rem:
                continue
            red_rep = combine_rep(qs)
            new_rep = [dict() for _ in self.gens]
            for k in range(len(self.gens)):
                acc = dict(reps[i][k])
                tmp = {}
                _poly_sub_scaled(tmp, acc, si, -one, zero)
                acc = tmp
                _poly_sub_scaled(acc, reps[j][k], sj, one, zero)
                _poly_sub_scaled(acc, red_rep[k], (0,) * nv, one, zero)
                new_rep[k] = acc
            idx = insert(rem, new_rep)
            update_pairs(idx)
            if stop_on_unit and self.ncomps == 1 and lts[idx] == (0, (0,) * nv):
                unit_reached = True
                break

        if unit_reached:
            # ideal contains a unit; the reduced basis is {1}
            for idx in range(len(work)):
                if lts[idx] == (0, (0,) * nv):
                    work[:] = [work[idx]]
                    reps[:] = [reps[idx]]
                    lts[:] = [lts[idx]]
                    break
            self.contains_unit = True
            self._finish(work, lts, reps, reduce_tails=False)
            return

        # minimalization: keep elements whose LT is not divisible by another kept LT
        order_idx = sorted(range(len(work)), key=lambda i: self.mkey(lts[i]))
        kept: list[int] = []
        for i in order_idx:
            if any(
                lts[k][0] == lts[i][0] and _divides(lts[k][1], lts[i][1]) for k in kept
            ):
                continue
            kept.append(i)
        work2 = [work[i] for i in kept]
        lts2 = [lts[i] for i in kept]
        reps2 = [reps[i] for i in kept]
        self.contains_unit = self.ncomps == 1 and any(
            lt == (0, (0,) * nv) for lt in lts2
        )
        self._finish(work2, lts2, reps2, reduce_tails=True)

    def _finish(self, work, lts, reps, reduce_tails: bool):
        field = self.ring.coeff_field
        zero = field.zero
        nv = self.ring.nvars

        if reduce_tails:
            changed = True
            while changed:
                changed = False
                for i in range(len(work)):
                    others = [k for k in range(len(work)) if k != i]
                    rem = {}
                    cur = dict(work[i])
                    q_acc = {k: {} for k in others}
                    while cur:
                        m = max(cur, key=self.mkey)
                        c = cur[m]
                        comp, e = m
                        hit = None
                        for k in others:
                            if lts[k][0] == comp and _divides(lts[k][1], e):
                                hit = k
                                break
                        if hit is None:
                            rem[m] = c
                            del cur[m]
                            continue
                        shift = tuple(a - b for a, b in zip(e, lts[hit][1]))
                        q_acc[hit][shift] = q_acc[hit].get(shift, zero) + c
                        _vp_sub_scaled(cur, work[hit], shift, c, zero)
                    if rem != work[i]:
                        changed = True
                        work[i] = rem
                        for k in others:
                            if not q_acc[k]:
                                continue
                            for j in range(len(self.gens)):
                                acc = reps[i][j]
                                for shift, c in q_acc[k].items():
                                    _poly_sub_scaled(acc, reps[k][j], shift, c, zero)

        final_order = sorted(range(len(work)), key=lambda i: self.mkey(lts[i]))
        self._work = [work[i] for i in final_order]
        self._lts = [lts[i] for i in final_order]
        self.elements: list[Vec] = [
            _vp_to_vec(w, self.ring, self.ncomps) for w in self._work
        ]
        self.lifts: list[Vec] = [
            tuple(self.ring.poly(r) for r in reps[i]) for i in final_order
        ]
        for vec, lift in zip(self.elements, self.lifts):
            acc = [self.ring.zero() for _ in range(self.ncomps)]
            for coeff_poly, gen in zip(lift, self.gens):
                for comp in range(self.ncomps):
                    acc[comp] = acc[comp] + coeff_poly * gen[comp]
            if tuple(acc) != vec:
                raise SepelimError("internal error: basis lift failed re-expansion")

    # -- queries -------------------------------------------------------------

    def reduce(self, vec: Vec) -> tuple[Vec, Vec]:
        """Full division: returns (normal form, quotients against the basis)."""
        field = self.ring.coeff_field
        zero = field.zero
        rem: dict = {}
        cur = _vp_from_vec(tuple(vec))
        qs: list[dict] = [dict() for _ in self._work]
        while cur:
            m = max(cur, key=self.mkey)
            c = cur[m]
            comp, e = m
            hit = None
            for i, (lcomp, le) in enumerate(self._lts):
                if lcomp == comp and _divides(le, e):
                    hit = i
                    break
            if hit is None:
                rem[m] = c
                del cur[m]
                continue
            shift = tuple(a - b for a, b in zip(e, self._lts[hit][1]))
            qs[hit][shift] = qs[hit].get(shift, zero) + c
            _vp_sub_scaled(cur, self._work[hit], shift, c, zero)
        return (
            _vp_to_vec(rem, self.ring, self.ncomps),
            tuple(self.ring.poly(q) for q in qs),
        )

    def normal_form(self, vec: Vec) -> Vec:
        return self.reduce(vec)[0]

    def contains(self, vec: Vec) -> bool:
        return all(p.is_zero() for p in self.normal_form(vec))

    def lift(self, vec: Vec) -> Vec | None:
        """Express vec in terms of the original generators; None if not a member.

        The result is the canonical lift through the reduced basis composed
        with the basis-to-generator lifts.  Re-expansion is always checked.
        """
        rem, qs = self.reduce(vec)
        if any(not p.is_zero() for p in rem):
            return None
        out = [self.ring.zero() for _ in self.gens]
        for q, lift in zip(qs, self.lifts):
            if q.is_zero():
                continue
            for j in range(len(self.gens)):
                out[j] = out[j] + q * lift[j]
        acc = [self.ring.zero() for _ in range(self.ncomps)]
        for coeff_poly, gen in zip(out, self.gens):
            for comp in range(self.ncomps):
                acc[comp] = acc[comp] + coeff_poly * gen[comp]
        if tuple(acc) != tuple(vec):
            raise SepelimError("internal error: membership lift failed re-expansion")
        return tuple(out)


# ---------------------------------------------------------------------------
# convenience wrappers
# ---------------------------------------------------------------------------


def groebner_basis(
    gens: list[Polynomial],
    order: TermOrder | None = None,
    stop_on_unit: bool = False,
) -> GroebnerBasis:
    ring = gens[0].ring if gens else None
    if ring is None:
        raise SepelimError("cannot infer the ring of an empty generator list")
    return GroebnerBasis(ring, 1, [(g,) for g in gens], order, stop_on_unit)


def module_groebner_basis(
    gens: list[Vec], ring: GradedRing, ncomps: int, order: TermOrder | None = None
) -> GroebnerBasis:
    return GroebnerBasis(ring, ncomps, list(gens), order)


def lift_membership(vec: Vec, gens: list[Vec], ring: GradedRing, ncomps: int) -> Vec:
    """Solve the explicit module membership problem; raises MembershipError."""
    gb = GroebnerBasis(ring, ncomps, list(gens))
    out = gb.lift(tuple(vec))
    if out is None:
        raise MembershipError("not a member")
    return out


def syzygies(gens: list[Vec], ring: GradedRing, ncomps: int) -> list[Vec]:
    """Generators of the syzygy module Syz(gens) in P^len(gens).

    Computed from a Groebner basis of the graph module {(v, u) : v = gens.u}
    with the original components dominating, then canonicalized to the
    reduced basis of the extracted module.  Every returned vector is checked
    against the defining relation.
    """
    ell = len(gens)
    if ell == 0:
        return []
    graph = []
    zero = ring.zero()
    one = ring.one()
    for i, g in enumerate(gens):
        tail = [zero] * ell
        tail[i] = one
        graph.append(tuple(g) + tuple(tail))
    gb = GroebnerBasis(ring, ncomps + ell, graph)
    raw = [
        el[ncomps:]
        for el in gb.elements
        if all(p.is_zero() for p in el[:ncomps])
    ]
    if not raw:
        return []
    canon = GroebnerBasis(ring, ell, raw).elements
    for s in canon:
        acc = [zero] * ncomps
        for coeff_poly, gen in zip(s, gens):
            for comp in range(ncomps):
                acc[comp] = acc[comp] + coeff_poly * gen[comp]
        if any(not p.is_zero() for p in acc):
            raise SepelimError("internal error: invalid syzygy")
    return canon


def ideal_syzygies(gens: list[Polynomial], ring: GradedRing) -> list[Vec]:
    return syzygies([(g,) for g in gens], ring, 1)


# ---------------------------------------------------------------------------
# gcd / lcm / exact division (used by the fraction-field coefficients)
# ---------------------------------------------------------------------------


def poly_exact_div(f: Polynomial, g: Polynomial) -> Polynomial:
    """Exact quotient f/g; raises if the division is not exact."""
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    ring = f.ring
    field = ring.coeff_field
    order = degrevlex(ring.nvars)
    lt_g, lc_g = g.leading_term(order)
    quotient: dict = {}
    rest = f
    while not rest.is_zero():
        lt_r, lc_r = rest.leading_term(order)
        if not _divides(lt_g, lt_r):
            raise SepelimError("not an exact polynomial division")
        shift = tuple(a - b for a, b in zip(lt_r, lt_g))
        c = lc_r / lc_g
        quotient[shift] = c
        rest = rest - g.mul_term(shift, c)
    return ring.poly(quotient)


def _monic(f: Polynomial) -> Polynomial:
    if f.is_zero():
        return f
    order = degrevlex(f.ring.nvars)
    _, lc = f.leading_term(order)
    one = f.ring.coeff_field.one
    return f if lc == one else f.scale(one / lc)


def poly_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic gcd over the rationals.

    Univariate: Euclidean algorithm.  Multivariate: lcm through the
    elimination ideal of <t*f, (1-t)*g> followed by exact division.
    """
    ring = f.ring
    if f.is_zero():
        return _monic(g)
    if g.is_zero():
        return _monic(f)
    if f.std_degree() == 0 or g.std_degree() == 0:
        return ring.one()
    if ring.nvars == 1:
        a, b = f, g
        basis_order = degrevlex(1)
        while not b.is_zero():
            gb = GroebnerBasis(ring, 1, [(_monic(b),)], basis_order)
            a, b = b, gb.normal_form((a,))[0]
        return _monic(a)
    return poly_exact_div(f * g, poly_lcm(f, g))


def poly_lcm(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic lcm of two nonzero polynomials via tag-variable elimination."""
    if f.is_zero() or g.is_zero():
        raise ZeroDivisionError("lcm of zero polynomial")
    ring = f.ring
    tname = "#t"
    big = GradedRing((tname,) + ring.names, (0,) + ring.weights, ring.coeff_field)

    def up(p: Polynomial) -> Polynomial:
        return big.poly({(0,) + e: c for e, c in p.terms})

    t = big.var(0)
    one = big.one()
    gens = [t * up(f), (one - t) * up(g)]
    gb = GroebnerBasis(big, 1, [(x,) for x in gens], elimination_order(big, (0,)))
    candidates = [el[0] for el in gb.elements if not el[0].involves(0)]
    if len(candidates) != 1:
        raise SepelimError("internal error: lcm elimination is not principal")
    lcm_big = candidates[0]
    return _monic(ring.poly({e[1:]: c for e, c in lcm_big.terms}))
