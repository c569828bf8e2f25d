"""Classical Littlewood-Richardson rule.

Coefficients are computed by backtracking over column-strict skew fillings
whose reverse reading word is a lattice permutation.  The search adds one
letter at a time as a horizontal strip, carrying the per-row counts of the
previous letter so the lattice condition can prune on-line: the number of
``i``s in rows 1..R may never exceed the number of ``(i-1)``s in rows
1..R-1.

Everything here is exact integer arithmetic; sizes are desk scale (shapes
of a few dozen cells), so no attempt is made to scale beyond that.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .partitions import Partition, contains, partition, weight


@dataclass(frozen=True)
class SchurExpansion:
    """Expansion of ``s_lam * s_mu`` with positive integer coefficients.

    ``terms`` maps each contributing shape to its coefficient, in
    descending lexicographic order of the shape.
    """

    lam: Partition
    mu: Partition
    terms: dict[Partition, int] = field(compare=False)

    def support(self) -> set[Partition]:
        return set(self.terms)

    def __getitem__(self, nu: Partition) -> int:
        return self.terms.get(partition(nu), 0)

    def __iter__(self):
        return iter(self.terms.items())


def _strip_additions(shape, size, prev, cap):
    """Ways to add ``size`` cells of one letter to ``shape``.

    Yields ``(new_shape, row_counts)``.  A strip adds at most
    ``shape[r-1] - shape[r]`` cells to row r (rows 0-based), stays inside
    ``cap`` when given, and respects the lattice budget carried in
    ``prev`` (row counts of the previous letter, or None for letter 1).
    """
    nrows = len(cap) if cap is not None else len(shape) + 1
    base = list(shape) + [0] * (nrows - len(shape))

    caps = []
    for r in range(nrows):
        if r == 0:
            hi = size if cap is None else cap[0] - base[0]
        else:
            hi = base[r - 1] - base[r]
            if cap is not None:
                hi = min(hi, cap[r] - base[r])
        caps.append(max(hi, 0))
    suffix = [0] * (nrows + 1)
    for r in range(nrows - 1, -1, -1):
        suffix[r] = suffix[r + 1] + caps[r]

    rows = list(base)
    counts = [0] * nrows

    def rec(r, rem, budget):
        if rem == 0:
            out = list(rows)
            while out and out[-1] == 0:
                out.pop()
            yield tuple(out), tuple(counts)
            return
        if r == nrows or rem > suffix[r]:
            return
        hi = min(caps[r], rem)
        if budget is not None:
            hi = min(hi, budget)
        prev_r = prev[r] if prev is not None and r < len(prev) else 0
        for a in range(hi + 1):
            rows[r] = base[r] + a
            counts[r] = a
            nb = None if budget is None else budget - a + prev_r
            yield from rec(r + 1, rem - a, nb)
        rows[r] = base[r]
        counts[r] = 0

    yield from rec(0, size, None if prev is None else 0)


def _iter_final_shapes(lam, mu, cap):
    """Final shapes of all LR fillings of content ``mu`` grown on ``lam``."""

    def rec(i, shape, prev):
        if i == len(mu):
            yield shape
            return
        for new_shape, counts in _strip_additions(shape, mu[i], prev, cap):
            yield from rec(i + 1, new_shape, counts)

    yield from rec(0, lam, None)


@lru_cache(maxsize=200_000)
def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """The multiplicity of ``s_nu`` in ``s_lam * s_mu`` (0 when incompatible)."""
    lam, mu, nu = partition(lam), partition(mu), partition(nu)
    if weight(nu) != weight(lam) + weight(mu):
        return 0
    if not contains(nu, lam) or not contains(nu, mu):
        return 0
    return sum(1 for _ in _iter_final_shapes(lam, mu, nu))


def lr_positive(lam: Partition, mu: Partition, nu: Partition) -> bool:
    """True iff the coefficient is nonzero; stops at the first filling."""
    lam, mu, nu = partition(lam), partition(mu), partition(nu)
    if weight(nu) != weight(lam) + weight(mu):
        return False
    if not contains(nu, lam) or not contains(nu, mu):
        return False
    for _ in _iter_final_shapes(lam, mu, nu):
        return True
    return False


@lru_cache(maxsize=50_000)
def _product_items(lam: Partition, mu: Partition) -> tuple[tuple[Partition, int], ...]:
    counter: dict[Partition, int] = {}
    for shape in _iter_final_shapes(lam, mu, None):
        counter[shape] = counter.get(shape, 0) + 1
    return tuple(sorted(counter.items(), reverse=True))


def schur_product(lam: Partition, mu: Partition) -> SchurExpansion:
    """Full expansion of ``s_lam * s_mu`` in the Schur basis."""
    lam, mu = partition(lam), partition(mu)
    return SchurExpansion(lam, mu, dict(_product_items(lam, mu)))
