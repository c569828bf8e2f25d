"""Decomposition of Horn-feasible triples and the repainting procedure.

A triple of weakly decreasing nonnegative sequences ``(a, b, c)`` that
satisfies every Horn inequality splits into blocks ``(t, a(l), b(l), c(l))``
with ``t in [0, 1]`` where each scaled block meets its own inequalities
strictly below the top size and with equality at the top.  The algorithm
follows the minimal-scaling argument: shrink ``a`` and ``b`` by the
smallest factor that saturates some inequality, split along a saturated
triple, and recurse on the complement with the factor locked in.

``repaint_canonicalize`` is the companion combinatorial step for sums of
``m`` matrices: any balanced coloring of ``{1..mp}`` reaches the canonical
interleaved coloring by repeatedly interlacing two color classes.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple, Sequence

from .errors import BadColoringError, DecompositionError, HornViolatedError
from .horn import as_fraction, horn_triples

Frac = Fraction


class Block(NamedTuple):
    """One component of a decomposition: ``c`` piece equals t times the sum."""

    t: Fraction
    a: tuple[Fraction, ...]
    b: tuple[Fraction, ...]
    c: tuple[Fraction, ...]

    def to_json(self) -> dict:
        return {"t": str(self.t),
                "a": [str(x) for x in self.a],
                "b": [str(x) for x in self.b],
                "c": [str(x) for x in self.c]}


def _coerce_triple(a, b, c):
    out = []
    for name, seq in (("a", a), ("b", b), ("c", c)):
        vals = tuple(as_fraction(x) for x in seq)
        if any(x < 0 for x in vals):
            raise HornViolatedError(f"{name} must be nonnegative: {seq}")
        if any(u < v for u, v in zip(vals, vals[1:])):
            raise HornViolatedError(f"{name} must be weakly decreasing: {seq}")
        out.append(vals)
    if not len(out[0]) == len(out[1]) == len(out[2]):
        raise HornViolatedError("a, b, c must have equal length")
    return tuple(out)


def _sums(tr, a, b, c):
    num = sum(c[k - 1] for k in tr.K)
    den = sum(a[i - 1] for i in tr.I) + sum(b[j - 1] for j in tr.J)
    return num, den


def _check_feasible(a, b, c, scale, context):
    """Every inequality of (scale*a, scale*b, c) must hold."""
    for tr in horn_triples(len(a)):
        num, den = _sums(tr, a, b, c)
        if num > scale * den:
            raise context(
                f"inequality {tr.describe()} fails at scale {scale}: "
                f"{num} > {scale * den}")


def _min_scale(a, b, c):
    """Smallest feasible scaling plus the lex-least saturated triple."""
    best = Frac(0)
    tight = []
    for tr in horn_triples(len(a)):
        num, den = _sums(tr, a, b, c)
        if den == 0:
            if num > 0:
                raise DecompositionError(
                    f"inequality {tr.describe()} cannot be saturated: "
                    f"{num} > 0 with zero right side")
            thr = Frac(0)
        else:
            thr = Frac(num, den)
        if thr > best:
            best, tight = thr, [tr]
        elif thr == best:
            tight.append(tr)
    chosen = min(tight, key=lambda tr: (tr.r, tr.I, tr.J, tr.K))
    return best, chosen


def _pick(seq, idx):
    return tuple(seq[i - 1] for i in idx)


def _drop(seq, idx):
    keep = set(idx)
    return tuple(x for i, x in enumerate(seq, start=1) if i not in keep)


def _split_saturated(a, b, c, scale):
    """Refine a block whose top inequality is already an equality.

    If every proper inequality of the scaled block is strict the block is
    final; a saturated proper triple splits it in two (both halves keep the
    top equality), and a violated one means the guarantee inherited from
    the matrix-level argument failed, which is a hard error.
    """
    n = len(a)
    total_c = sum(c)
    total_ab = sum(a) + sum(b)
    if total_c != scale * total_ab:
        raise DecompositionError(
            f"block {a},{b},{c} not saturated at scale {scale}")
    if n == 1:
        return [Block(scale, a, b, c)]
    tight = None
    for tr in horn_triples(n):
        if tr.r == n:
            continue
        num, den = _sums(tr, a, b, c)
        if num > scale * den:
            raise DecompositionError(
                f"sub-inequality {tr.describe()} violated inside a saturated block")
        if num == scale * den and tight is None:
            tight = tr
    if tight is None:
        return [Block(scale, a, b, c)]
    first = _split_saturated(_pick(a, tight.I), _pick(b, tight.J),
                             _pick(c, tight.K), scale)
    rest = _split_saturated(_drop(a, tight.I), _drop(b, tight.J),
                            _drop(c, tight.K), scale)
    return first + rest


def _decompose(a, b, c, inherited):
    n = len(a)
    if n == 0:
        return []
    scale, tr = _min_scale(a, b, c)
    if scale > inherited:
        raise DecompositionError(
            f"required scale {scale} exceeds inherited bound {inherited}")
    if tr.r == n:
        return _split_saturated(a, b, c, scale)
    blocks = _split_saturated(_pick(a, tr.I), _pick(b, tr.J), _pick(c, tr.K),
                              scale)
    rest = (_drop(a, tr.I), _drop(b, tr.J), _drop(c, tr.K))
    _check_feasible(*rest, scale, DecompositionError)
    return blocks + _decompose(*rest, scale)


def decompose_triple(a, b, c) -> list[Block]:
    """Split a Horn-feasible nonnegative triple into saturated blocks.

    Raises ``HornViolatedError`` when the input fails its precondition and
    ``DecompositionError`` if an internal guarantee breaks (which would
    contradict the matrix-level facts the recursion leans on).
    Decompositions are not unique; this one is pinned down by always
    picking the lexicographically least saturated triple.
    """
    a, b, c = _coerce_triple(a, b, c)
    if len(a) == 0:
        return []
    _check_feasible(a, b, c, Frac(1), HornViolatedError)
    return _decompose(a, b, c, Frac(1))


def validate_decomposition(a, b, c, blocks: Sequence[Block], tol=0) -> bool:
    """Accept any decomposition with the required saturation pattern.

    Checks that the blocks partition the value multisets of ``a``, ``b``,
    ``c``, that every ``t`` lies in [0, 1], and that each scaled block
    satisfies its inequalities strictly below the top size and exactly at
    the top.  ``tol`` loosens the comparisons for floating inputs.
    """
    try:
        a, b, c = _coerce_triple(a, b, c)
    except HornViolatedError:
        return False
    tol = as_fraction(tol)
    for seq, pieces in ((a, [bl.a for bl in blocks]),
                        (b, [bl.b for bl in blocks]),
                        (c, [bl.c for bl in blocks])):
        merged = sorted(x for piece in pieces for x in piece)
        if merged != sorted(seq):
            return False
    for bl in blocks:
        t = as_fraction(bl.t)
        if not 0 <= t <= 1:
            return False
        n = len(bl.a)
        if not (len(bl.b) == len(bl.c) == n and n >= 1):
            return False
        if any(u < v for seq in (bl.a, bl.b, bl.c) for u, v in zip(seq, seq[1:])):
            return False
        for tr in horn_triples(n):
            num, den = _sums(tr, bl.a, bl.b, bl.c)
            margin = t * den - num
            if tr.r == n:
                if abs(margin) > tol:
                    return False
            elif margin <= tol:
                return False
    return True


class RepaintStep(NamedTuple):
    """One two-color interlacing: classes of ``colors`` rewritten from ``start``."""

    colors: tuple[int, int]
    start: int
    coloring: tuple[int, ...]

    def to_json(self) -> dict:
        return {"colors": list(self.colors), "start": self.start,
                "coloring": list(self.coloring)}


def _canonical_prefix(coloring, m) -> int:
    k = 0
    while k < len(coloring) and coloring[k] == k % m + 1:
        k += 1
    return k


def repaint_canonicalize(coloring: Sequence[int], m: int,
                         p: int | None = None) -> list[RepaintStep]:
    """Steps taking a balanced coloring to the canonical interleaved one.

    Each step picks the first miscolored index, gathers the two relevant
    color classes, and repaints them alternately starting with whichever
    color fixes that index; the canonical prefix grows strictly every
    step, so at most ``m * p`` steps occur.
    """
    coloring = tuple(int(x) for x in coloring)
    if p is None:
        if m < 1 or len(coloring) % m:
            raise BadColoringError(f"length {len(coloring)} not a multiple of m={m}")
        p = len(coloring) // m
    if len(coloring) != m * p:
        raise BadColoringError(f"expected {m * p} entries, got {len(coloring)}")
    for color in range(1, m + 1):
        if sum(1 for x in coloring if x == color) != p:
            raise BadColoringError(f"color {color} must appear exactly {p} times")

    steps = []
    current = list(coloring)
    prefix = _canonical_prefix(current, m)
    while prefix < m * p:
        wrong = current[prefix]
        wanted = prefix % m + 1
        members = [i for i, x in enumerate(current) if x in (wrong, wanted)]
        rank = members.index(prefix)
        start = wanted if rank % 2 == 0 else wrong
        other = wrong if start == wanted else wanted
        for pos, i in enumerate(members):
            current[i] = start if pos % 2 == 0 else other
        new_prefix = _canonical_prefix(current, m)
        if new_prefix <= prefix:
            raise RuntimeError("repainting failed to make progress")
        prefix = new_prefix
        steps.append(RepaintStep((wrong, wanted), start, tuple(current)))
    return steps
