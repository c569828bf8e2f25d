"""Integer partitions, index sets, and the maps between them.

Partitions are canonical tuples of weakly decreasing positive integers
(trailing zeros stripped, ``()`` is the empty partition).  Index sets are
strictly increasing tuples of positive integers.  Both are plain tuples, so
they hash, compare lexicographically, and pickle for free.

The module houses the set/partition correspondence, the doubling map ``tau``
and its inverse (the 2-quotient), the star rearrangement of a pair, the
even/odd interlace split, and box complements.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterator, Sequence

from .errors import (
    DoesNotFitBoxError,
    InputError,
    NotDominoDecomposableError,
    NotSortedError,
    OddLengthError,
    PartsTooSmallError,
    RTooSmallError,
    SizeMismatchError,
)

Partition = tuple[int, ...]
IndexSet = tuple[int, ...]


def partition(parts: Sequence[int]) -> Partition:
    """Canonicalize ``parts``: validate weak decrease and strip trailing zeros."""
    parts = tuple(int(x) for x in parts)
    for a, b in zip(parts, parts[1:]):
        if a < b:
            raise InputError(f"parts not weakly decreasing: {parts}")
    if parts and parts[-1] < 0:
        raise InputError(f"negative part in {parts}")
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


def weight(lam: Partition) -> int:
    return sum(lam)


def part(lam: Partition, i: int) -> int:
    """The ``i``-th part (1-based), zero beyond the length."""
    return lam[i - 1] if 1 <= i <= len(lam) else 0


def contains(outer: Partition, inner: Partition) -> bool:
    """True when ``inner`` fits inside ``outer`` row by row."""
    return all(part(outer, i + 1) >= v for i, v in enumerate(inner))


def fits_box(lam: Partition, rows: int, cols: int) -> bool:
    return len(lam) <= rows and (not lam or lam[0] <= cols)


def index_set(elems: Sequence[int]) -> IndexSet:
    """Canonicalize a strictly increasing tuple of positive integers."""
    elems = tuple(int(x) for x in elems)
    if any(x < 1 for x in elems):
        raise InputError(f"index set elements must be >= 1: {elems}")
    if any(a >= b for a, b in zip(elems, elems[1:])):
        raise InputError(f"index set not strictly increasing: {elems}")
    return elems


def partitions_of(n: int, max_len: int | None = None,
                  max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` (optionally bounded), in descending lex order."""
    cap = n if max_part is None else min(max_part, n)
    rows = n if max_len is None else max_len

    def rec(remaining: int, biggest: int, depth: int, acc: list[int]):
        if remaining == 0:
            yield tuple(acc)
            return
        if depth == 0:
            return
        for v in range(min(biggest, remaining), 0, -1):
            acc.append(v)
            yield from rec(remaining - v, v, depth - 1, acc)
            acc.pop()

    if n == 0:
        yield ()
    elif n > 0 and (max_len is None or max_len > 0):
        yield from rec(n, cap, rows, [])


def partitions_in_box(rows: int, cols: int) -> Iterator[Partition]:
    """All partitions fitting in a ``rows x cols`` box, by weight then lex."""
    for n in range(rows * cols + 1):
        yield from partitions_of(n, max_len=rows, max_part=cols)


def partition_from_set(I: IndexSet) -> Partition:
    """Partition ``(i_r - r, ..., i_1 - 1)`` attached to a set ``{i_1 < ... < i_r}``."""
    r = len(I)
    return partition(tuple(I[r - 1 - k] - (r - k) for k in range(r)))


def set_from_partition(lam: Partition, r: int) -> IndexSet:
    """The unique ``r``-element set mapping back to ``lam``.

    ``r`` must be at least the number of nonzero parts; smaller parts pad
    with zeros, so the set always starts at consecutive integers.
    """
    if r < len(lam):
        raise RTooSmallError(f"need r >= {len(lam)} for {lam}, got {r}")
    return tuple(part(lam, r - k) + (k + 1) for k in range(r))


def tau_sets(I: IndexSet, J: IndexSet) -> IndexSet:
    """Union ``{2i-1 : i in I} | {2j : j in J}``, sorted."""
    if len(I) != len(J):
        raise SizeMismatchError(f"|I|={len(I)} but |J|={len(J)}")
    return tuple(sorted([2 * i - 1 for i in I] + [2 * j for j in J]))


def tau_partitions(lam: Partition, mu: Partition) -> Partition:
    """The doubling map on pairs: the shape whose 2-quotient is ``(lam, mu)``.

    Computed through the set correspondence at the minimal common padding;
    the result is independent of the padding choice.
    """
    r = max(len(lam), len(mu))
    if r == 0:
        return ()
    F = tau_sets(set_from_partition(lam, r), set_from_partition(mu, r))
    return partition_from_set(F)


def two_quotient(tau: Partition) -> tuple[Partition, Partition]:
    """Invert ``tau_partitions``: the unique pair mapping onto ``tau``.

    Uses the parity test on the 2r-element set of the shape: the shape is
    domino decomposable exactly when that set holds r odd and r even
    numbers (a padding-invariant condition, since one extra padding row
    shifts the set by ``+{1, 2}``).
    """
    tau = partition(tau)
    if not tau:
        return ((), ())
    r = (len(tau) + 1) // 2
    beta = set_from_partition(tau, 2 * r)
    odds = [x for x in beta if x % 2 == 1]
    evens = [x for x in beta if x % 2 == 0]
    if len(odds) != r or len(evens) != r:
        raise NotDominoDecomposableError(f"{tau} has a nonempty 2-core")
    lam = partition_from_set(tuple((x + 1) // 2 for x in odds))
    mu = partition_from_set(tuple(x // 2 for x in evens))
    return (lam, mu)


def is_domino_decomposable(tau: Partition) -> bool:
    try:
        two_quotient(tau)
    except NotDominoDecomposableError:
        return False
    return True


def star_pair(lam: Partition, mu: Partition, parts: int) -> tuple[Partition, Partition]:
    """Rearrangement ``(lam, mu) -> (lam*, mu*)`` on pairs padded to ``parts``.

    With ``L_k = lam_k - k`` and ``M_l = mu_l - l`` (zero-padded to
    ``parts`` entries):

        lam*_k = L_k + #{l : M_l >= L_k}
        mu*_l  = M_l + 1 + #{k : L_k > M_l}

    The total weight is conserved and both outputs are partitions.
    """
    if parts < max(len(lam), len(mu)):
        raise PartsTooSmallError(
            f"parts={parts} below max length of {lam}, {mu}")
    L = [part(lam, k) - k for k in range(1, parts + 1)]
    M = [part(mu, l) - l for l in range(1, parts + 1)]
    lam_star = [L[k] + sum(1 for m in M if m >= L[k]) for k in range(parts)]
    mu_star = [M[l] + 1 + sum(1 for x in L if x > M[l]) for l in range(parts)]
    return partition(lam_star), partition(mu_star)


def star_sets(I: IndexSet, J: IndexSet) -> tuple[IndexSet, IndexSet]:
    """The star rearrangement phrased on index sets.

        I* = { i + #{i' in I : i' < i} - #{j in J : j < i}  for i in I }
        J* = { j + #{j' in J : j' <= j} - #{i in I : i <= j} for j in J }
    """
    if len(I) != len(J):
        raise SizeMismatchError(f"|I|={len(I)} but |J|={len(J)}")
    I_star = tuple(sorted(
        i + sum(1 for x in I if x < i) - sum(1 for y in J if y < i)
        for i in I))
    J_star = tuple(sorted(
        j + sum(1 for y in J if y <= j) - sum(1 for x in I if x <= j)
        for j in J))
    return index_set(I_star), index_set(J_star)


def is_star_fixed_point(lam: Partition, mu: Partition, parts: int) -> bool:
    """True when ``mu_1, lam_1, mu_2, lam_2, ...`` is weakly decreasing."""
    seq = _interleaved(lam, mu, parts)
    return all(a >= b for a, b in zip(seq, seq[1:]))


def _interleaved(lam: Partition, mu: Partition, parts: int) -> list[int]:
    out = []
    for k in range(1, parts + 1):
        out.append(part(mu, k))
        out.append(part(lam, k))
    return out


def interlace_split(gamma: Sequence) -> tuple[tuple, tuple]:
    """Split a weakly decreasing even-length sequence into odd/even positions."""
    gamma = tuple(gamma)
    if len(gamma) % 2:
        raise OddLengthError(f"length {len(gamma)} is odd")
    if any(a < b for a, b in zip(gamma, gamma[1:])):
        raise NotSortedError(f"not weakly decreasing: {gamma}")
    return gamma[0::2], gamma[1::2]


def complement(nu: Partition, p: int, q: int) -> Partition:
    """Complement of ``nu`` inside the ``p x q`` box: ``(q - nu_p, ..., q - nu_1)``."""
    if not fits_box(nu, p, q):
        raise DoesNotFitBoxError(f"{nu} does not fit in {p}x{q}")
    return partition(tuple(q - part(nu, p - k) for k in range(p)))


def subsets_colex(p: int, r: int) -> Iterator[IndexSet]:
    """r-element subsets of {1..p} in colexicographic order."""
    for combo in sorted(combinations(range(1, p + 1), r),
                        key=lambda s: tuple(reversed(s))):
        yield combo


# -- text formats shared by the CLI ----------------------------------------
#
# Partition: comma-separated nonnegative integers, "-" for the empty one.
# Index set: "{2,3,7,8}".

def parse_partition(text: str) -> Partition:
    text = text.strip()
    if text in ("-", ""):
        return ()
    try:
        return partition([int(tok) for tok in text.split(",")])
    except ValueError as exc:
        raise InputError(f"bad partition literal {text!r}: {exc}") from None


def format_partition(lam: Partition) -> str:
    return ",".join(str(x) for x in lam) if lam else "-"


def parse_index_set(text: str) -> IndexSet:
    text = text.strip()
    if not (text.startswith("{") and text.endswith("}")):
        raise InputError(f"bad index set literal {text!r}")
    body = text[1:-1].strip()
    if not body:
        return ()
    try:
        return index_set([int(tok) for tok in body.split(",")])
    except ValueError as exc:
        raise InputError(f"bad index set literal {text!r}: {exc}") from None


def format_index_set(I: IndexSet) -> str:
    return "{" + ",".join(str(x) for x in I) + "}"
