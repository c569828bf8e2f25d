"""Semistandard domino tableaux and the two-quotient coefficient rule.

A tableau is a tiling of a shape by labelled dominoes such that the induced
cell labels weakly increase along rows and strictly increase down columns,
the two cells of a single vertical domino being exempt from the strictness
between themselves.  The reading word scans columns right to left, top
down, emitting a horizontal domino at its left column, and the Yamanouchi
tableaux of shape ``tau_partitions(lam, mu)`` and weight ``nu`` count the
Littlewood-Richardson coefficient of ``(lam, mu, nu)``.

Two engines live here: ``enumerate_domino_tableaux`` places dominoes at the
smallest uncovered cell in row-major order (deterministic output order for
golden tests), while the counting paths walk cells column by column, right
to left, so the reading word is produced incrementally and Yamanouchi
violations prune the search as soon as a column closes.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Sequence

from .errors import InvalidInputError
from .partitions import Partition, partition, tau_partitions, weight


class Domino(NamedTuple):
    row: int            # 1-based anchor (top-left cell)
    col: int
    horizontal: bool
    label: int

    def cells(self) -> tuple[tuple[int, int], tuple[int, int]]:
        if self.horizontal:
            return ((self.row, self.col), (self.row, self.col + 1))
        return ((self.row, self.col), (self.row + 1, self.col))

    @property
    def orientation(self) -> str:
        return "horizontal" if self.horizontal else "vertical"


@dataclass(frozen=True)
class DominoTableau:
    shape: Partition
    dominoes: tuple[Domino, ...]

    def cell_labels(self) -> dict[tuple[int, int], int]:
        out = {}
        for d in self.dominoes:
            for cell in d.cells():
                out[cell] = d.label
        return out

    def weight(self) -> tuple[int, ...]:
        """Label multiplicities; a partition whenever the word is lattice."""
        counts: dict[int, int] = {}
        for d in self.dominoes:
            counts[d.label] = counts.get(d.label, 0) + 1
        if not counts:
            return ()
        return tuple(counts.get(i, 0) for i in range(1, max(counts) + 1))


def _shape_cells(shape: Partition) -> list[tuple[int, int]]:
    return [(r + 1, c + 1) for r in range(len(shape)) for c in range(shape[r])]


def reading_word(t: DominoTableau) -> tuple[int, ...]:
    """Labels in column order, rightmost column first, top down per column.

    A horizontal domino is skipped when its right column is scanned and
    emitted at its left column, so every domino is read exactly once, at
    its anchor.
    """
    order = sorted(t.dominoes, key=lambda d: (-d.col, d.row))
    return tuple(d.label for d in order)


def is_yamanouchi(word: Sequence[int]) -> bool:
    """Every prefix holds label ``i`` at least as often as ``i + 1``.

    Checking adjacent labels suffices: the condition for ``j > i + 1``
    follows by chaining (the full-pairs check is kept in the tests).
    """
    counts: dict[int, int] = {}
    for v in word:
        counts[v] = counts.get(v, 0) + 1
        if v >= 2 and counts[v] > counts.get(v - 1, 0):
            return False
    return True


def is_valid_domino_tableau(t: DominoTableau) -> bool:
    """Exact tiling of the shape plus the semistandard label conditions."""
    try:
        shape = partition(t.shape)
    except Exception:
        return False
    cells = set(_shape_cells(shape))
    owner: dict[tuple[int, int], Domino] = {}
    for d in t.dominoes:
        if d.label < 1:
            return False
        for cell in d.cells():
            if cell not in cells or cell in owner:
                return False
            owner[cell] = d
    if len(owner) != len(cells):
        return False
    for (r, c), d in owner.items():
        right = owner.get((r, c + 1))
        if right is not None and d.label > right.label:
            return False
        below = owner.get((r + 1, c))
        if below is not None and below is not d and d.label >= below.label:
            return False
    return True


def is_valid_ydt(t: DominoTableau) -> bool:
    return is_valid_domino_tableau(t) and is_yamanouchi(reading_word(t))


def _neighbor_ok(owner, d: Domino) -> bool:
    """Semistandard checks of ``d`` against already-placed neighbors."""
    for (r, c) in d.cells():
        for (nr, nc, strict_down) in ((r, c - 1, False), (r, c + 1, False),
                                      (r - 1, c, True), (r + 1, c, True)):
            other = owner.get((nr, nc))
            if other is None or other is d:
                continue
            if strict_down:
                upper, lower = (other, d) if nr < r else (d, other)
                if upper.label >= lower.label:
                    return False
            else:
                left, right = (other, d) if nc < c else (d, other)
                if left.label > right.label:
                    return False
    return True


def enumerate_domino_tableaux(shape: Partition, weight_filter: Partition | None = None,
                              yamanouchi: bool = False) -> Iterator[DominoTableau]:
    """All semistandard domino tableaux of ``shape``, deterministically.

    Dominoes are placed at the smallest uncovered cell in row-major order,
    trying horizontal before vertical, labels ascending; the output order
    is the induced depth-first order.  ``weight_filter`` restricts to
    tableaux of exactly that weight, ``yamanouchi`` to those whose reading
    word is a lattice word.  A shape with no domino tiling yields nothing.
    """
    shape = partition(shape)
    cells = _shape_cells(shape)
    n = len(cells) // 2
    if len(cells) % 2:
        return
    if weight_filter is not None:
        weight_filter = partition(weight_filter)
        if sum(weight_filter) != n:
            return
        max_label = len(weight_filter)
    else:
        max_label = n
    in_shape = set(cells)
    owner: dict[tuple[int, int], Domino] = {}
    counts = [0] * (max_label + 1)
    placed: list[Domino] = []

    def candidates(r, c):
        for horizontal in (True, False):
            rr, cc = (r, c + 1) if horizontal else (r + 1, c)
            if (rr, cc) not in in_shape or (rr, cc) in owner:
                continue
            for label in range(1, max_label + 1):
                if weight_filter is not None and counts[label] >= weight_filter[label - 1]:
                    continue
                yield Domino(r, c, horizontal, label)

    def rec(idx) -> Iterator[DominoTableau]:
        while idx < len(cells) and cells[idx] in owner:
            idx += 1
        if idx == len(cells):
            t = DominoTableau(shape, tuple(placed))
            if yamanouchi and not is_yamanouchi(reading_word(t)):
                return
            yield t
            return
        r, c = cells[idx]
        for d in candidates(r, c):
            if not _neighbor_ok(owner, d):
                continue
            for cell in d.cells():
                owner[cell] = d
            counts[d.label] += 1
            placed.append(d)
            yield from rec(idx + 1)
            placed.pop()
            counts[d.label] -= 1
            for cell in d.cells():
                del owner[cell]

    yield from rec(0)


def _count_yamanouchi(shape: Partition, weight_filter: Partition | None):
    """Count Yamanouchi tableaux, per weight when no filter is given.

    Walks cells column by column right to left (rows top down inside a
    column).  At the visit of cell ``(r, c)`` every domino anchored at a
    reading position strictly earlier than ``(c, r)`` has been placed, so
    the reading word grows in step with the walk and a Yamanouchi failure
    cuts the branch as soon as the offending column closes.  Vertical
    dominoes emit at their own position and are ladder-checked on the
    spot; horizontals into the next column wait in ``pending``, which
    stays sorted because anchors are pushed in walk order.  Returns a
    dict from weight to count (a single entry when a filter is given).
    """
    shape = partition(shape)
    cells = sorted(_shape_cells(shape), key=lambda rc: (-rc[1], rc[0]))
    ncells = len(cells)
    if ncells % 2:
        return {}
    n = ncells // 2
    if weight_filter is not None:
        weight_filter = partition(weight_filter)
        if sum(weight_filter) != n:
            return {}
        max_label = len(weight_filter)
        quota = (0,) + weight_filter
    else:
        max_label = n
        quota = None
    in_shape = set(cells)
    label_at: dict[tuple[int, int], int] = {}
    placed = [0] * (max_label + 2)
    emitted = [0] * (max_label + 2)
    pending: deque[tuple[tuple[int, int], int]] = deque()
    census: dict[Partition, int] = {}

    def rec(idx):
        while idx < ncells and cells[idx] in label_at:
            idx += 1
        limit = None if idx == ncells else (-cells[idx][1], cells[idx][0])
        flushed = []
        ok = True
        while pending and (limit is None or pending[0][0] < limit):
            key, v = pending.popleft()
            flushed.append((key, v))
            emitted[v] += 1
            if v >= 2 and emitted[v] > emitted[v - 1]:
                ok = False
                break
        if ok:
            if idx == ncells:
                w = tuple(placed[1:max_label + 1])
                while w and w[-1] == 0:
                    w = w[:-1]
                census[w] = census.get(w, 0) + 1
            else:
                branch(idx, *cells[idx])
        for key, v in reversed(flushed):
            emitted[v] -= 1
            pending.appendleft((key, v))

    def branch(idx, r, c):
        lo = label_at.get((r - 1, c), 0) + 1
        right = label_at.get((r, c + 1), max_label)
        if (r + 1, c) in in_shape and (r + 1, c) not in label_at:
            hi = min(right,
                     label_at.get((r + 1, c + 1), max_label),
                     label_at.get((r + 2, c), max_label + 1) - 1)
            for v in range(lo, hi + 1):
                if quota is not None and placed[v] >= quota[v]:
                    continue
                if v >= 2 and emitted[v] >= emitted[v - 1]:
                    continue
                label_at[(r, c)] = label_at[(r + 1, c)] = v
                placed[v] += 1
                emitted[v] += 1
                rec(idx + 1)
                emitted[v] -= 1
                placed[v] -= 1
                del label_at[(r, c)], label_at[(r + 1, c)]
        if (r, c - 1) in in_shape and (r, c - 1) not in label_at:
            hi = min(right, label_at.get((r + 1, c), max_label + 1) - 1)
            for v in range(lo, hi + 1):
                if quota is not None and placed[v] >= quota[v]:
                    continue
                label_at[(r, c)] = label_at[(r, c - 1)] = v
                placed[v] += 1
                pending.append(((1 - c, r), v))
                rec(idx + 1)
                pending.pop()
                placed[v] -= 1
                del label_at[(r, c)], label_at[(r, c - 1)]

    rec(0)
    return census


def count_ydt_by_weight(shape: Partition) -> dict[Partition, int]:
    """Census of Yamanouchi tableaux of ``shape``, grouped by weight."""
    return _count_yamanouchi(shape, None)


def cl_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Littlewood-Richardson coefficient via the domino rule.

    Counts Yamanouchi domino tableaux of shape ``tau_partitions(lam, mu)``
    and weight ``nu``; agrees with ``lr.lr_coefficient``.
    """
    lam, mu, nu = partition(lam), partition(mu), partition(nu)
    if weight(nu) != weight(lam) + weight(mu):
        return 0
    shape = tau_partitions(lam, mu)
    census = _count_yamanouchi(shape, nu)
    return census.get(nu, 0)


def dilate_tableau(t: DominoTableau) -> DominoTableau:
    """Double a Yamanouchi tableau in both directions, injectively.

    Each domino with label ``k`` is chopped into four quarter dominoes of
    the same orientation, the top two labelled ``2k - 1`` and the bottom
    two ``2k``.  The result is a Yamanouchi tableau of the doubled shape
    and doubled-interleaved weight; all three properties are re-validated
    here rather than assumed.
    """
    if not is_valid_ydt(t):
        raise InvalidInputError("input is not a valid Yamanouchi domino tableau")
    out = []
    for d in t.dominoes:
        r2, c2 = 2 * d.row - 1, 2 * d.col - 1
        if d.horizontal:
            out += [Domino(r2, c2, True, 2 * d.label - 1),
                    Domino(r2, c2 + 2, True, 2 * d.label - 1),
                    Domino(r2 + 1, c2, True, 2 * d.label),
                    Domino(r2 + 1, c2 + 2, True, 2 * d.label)]
        else:
            out += [Domino(r2, c2, False, 2 * d.label - 1),
                    Domino(r2, c2 + 1, False, 2 * d.label - 1),
                    Domino(r2 + 2, c2, False, 2 * d.label),
                    Domino(r2 + 2, c2 + 1, False, 2 * d.label)]
    doubled = DominoTableau(tau_partitions(t.shape, t.shape),
                            tuple(sorted(out, key=lambda d: (d.row, d.col))))
    if not is_valid_ydt(doubled):
        raise RuntimeError(f"dilation produced an invalid tableau from {t}")
    if doubled.weight() != tau_partitions(t.weight(), t.weight()):
        raise RuntimeError(f"dilation weight mismatch for {t}")
    return doubled
