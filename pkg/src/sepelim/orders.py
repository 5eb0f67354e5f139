"""Matrix term orderings.

A term ordering is given by an integer matrix of full rank n; exponent
vectors are compared by the lexicographic order of their images under the
matrix rows.  For a genuine term ordering every indeterminate must exceed
1, i.e. the first nonzero entry of every column must be positive; the
constructor checks both conditions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import SepelimError
from .rings import GradedRing


def _rational_rank(rows: list[list[Fraction]]) -> int:
    m = [row[:] for row in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        pivot = None
        for r in range(rank, len(m)):
            if m[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        pr = m[rank]
        for r in range(len(m)):
            if r != rank and m[r][col] != 0:
                f = m[r][col] / pr[col]
                m[r] = [a - f * b for a, b in zip(m[r], pr)]
        rank += 1
        if rank == len(m):
            break
    return rank


@dataclass(frozen=True)
class TermOrder:
    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.matrix)
        if n == 0:
            return
        if any(len(row) != n for row in self.matrix):
            raise SepelimError("term ordering matrix must be square")
        rows = [[Fraction(x) for x in row] for row in self.matrix]
        if _rational_rank(rows) != n:
            raise SepelimError("term ordering matrix must have full rank")
        for col in range(n):
            lead = next((row[col] for row in self.matrix if row[col] != 0), 0)
            if lead <= 0:
                raise SepelimError(
                    "not a term ordering: some indeterminate is smaller than 1"
                )

    @property
    def nvars(self) -> int:
        return len(self.matrix)

    def key(self, exps: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(sum(r * e for r, e in zip(row, exps)) for row in self.matrix)

    def compare(self, t1: tuple[int, ...], t2: tuple[int, ...]) -> int:
        """-1, 0 or 1 as t1 <, =, > t2."""
        k1, k2 = self.key(t1), self.key(t2)
        if k1 < k2:
            return -1
        if k1 > k2:
            return 1
        return 0


def complete_to_full_rank(rows: list[tuple[int, ...]], n: int) -> tuple[tuple[int, ...], ...]:
    """Append rows of the reversed identity, dropping linearly dependent ones."""
    kept: list[tuple[int, ...]] = []
    frac_rows: list[list[Fraction]] = []

    def try_add(row):
        cand = frac_rows + [[Fraction(x) for x in row]]
        if _rational_rank(cand) == len(cand):
            kept.append(tuple(row))
            frac_rows.append([Fraction(x) for x in row])

    for row in rows:
        try_add(row)
    for i in range(n - 1, -1, -1):
        if len(kept) == n:
            break
        unit = tuple(1 if j == i else 0 for j in range(n))
        try_add(unit)
    if len(kept) != n:
        raise SepelimError("could not complete ordering matrix to full rank")
    return tuple(kept)


def degrevlex(n: int) -> TermOrder:
    rows = [tuple(1 for _ in range(n))]
    for i in range(n - 1, 0, -1):
        rows.append(tuple(-1 if j == i else 0 for j in range(n)))
    return TermOrder(complete_to_full_rank(rows, n))


def elimination_order(ring: GradedRing, z_indices: tuple[int, ...]) -> TermOrder:
    """Block order that makes the Z-indeterminates largest: Z-degree first,
    then degrevlex within the Z block, then degrevlex on the rest."""
    n = ring.nvars
    zset = set(z_indices)
    rest = [i for i in range(n) if i not in zset]
    zs = sorted(zset)
    rows = [tuple(1 if i in zset else 0 for i in range(n))]
    for i in reversed(zs[1:]):
        rows.append(tuple(-1 if j == i else 0 for j in range(n)))
    rows.append(tuple(1 if i in rest else 0 for i in range(n)))
    for i in reversed(rest[1:]):
        rows.append(tuple(-1 if j == i else 0 for j in range(n)))
    return TermOrder(complete_to_full_rank(rows, n))


def build_separating_order(ring: GradedRing, z_indices: tuple[int, ...]) -> TermOrder:
    """Ordering sigma with LT_sigma(f) = z_i for every W-homogeneous f whose
    Z-linear part is z_i.

    Single indeterminate: the indicator row of z comes first.  Several
    indeterminates (sorted by non-decreasing W-degree): the first row puts
    weight d_j on z_j, the second row d_j - 1, everything completed by
    reversed-identity rows.
    """
    n = ring.nvars
    if not z_indices:
        raise SepelimError("Z must not be empty")
    if len(set(z_indices)) != len(z_indices):
        raise SepelimError("Z must consist of distinct indeterminates")
    degs = [ring.weights[i] for i in z_indices]
    if any(d <= 0 for d in degs):
        raise SepelimError("Z must consist of indeterminates of positive degree")
    if any(degs[i] > degs[i + 1] for i in range(len(degs) - 1)):
        raise SepelimError("Z must be ordered by non-decreasing W-degree")

    if len(z_indices) == 1:
        rows = [tuple(1 if j == z_indices[0] else 0 for j in range(n))]
    else:
        row1 = [0] * n
        row2 = [0] * n
        for i, d in zip(z_indices, degs):
            row1[i] = d
            row2[i] = d - 1
        rows = [tuple(row1), tuple(row2)]
    return TermOrder(complete_to_full_rank(rows, n))
