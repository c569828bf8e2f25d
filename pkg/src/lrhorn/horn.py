"""Horn triples and the linear inequality families they index.

A triple ``(I, J, K)`` of r-element subsets of ``{1..p}`` belongs to the
family when the Littlewood-Richardson coefficient of the attached
partitions is positive; every such triple contributes one inequality to
each of the systems below (singular values of a matrix against its
off-diagonal block, eigenvalues against that block, sums of two matrices
with merged spectra, and the eigenvalue cone of ``A + B``).

All checks run in exact rational arithmetic.  Floats are converted to
exact fractions; when any input arrives as a float the comparisons default
to a ``1e-9`` slack, otherwise they are sharp.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple, Sequence

from .errors import BadShapeError, InputError, TooLargeForFullModeError
from .lr import lr_coefficient, lr_positive
from .partitions import (
    IndexSet,
    format_index_set,
    interlace_split,
    partition_from_set,
    subsets_colex,
    weight,
)

FLOAT_TOL = Fraction(1, 10 ** 9)


class HornTriple(NamedTuple):
    """Certified member of the positivity family over ``{1..p}``."""

    I: IndexSet
    J: IndexSet
    K: IndexSet
    p: int

    @property
    def r(self) -> int:
        return len(self.I)

    def describe(self) -> str:
        return (f"I={format_index_set(self.I)},J={format_index_set(self.J)},"
                f"K={format_index_set(self.K)}")


@lru_cache(maxsize=None)
def horn_triples(p: int, r: int | None = None) -> tuple[HornTriple, ...]:
    """All certified triples over ``{1..p}``, of size ``r`` or of every size.

    Subsets iterate in colex order; candidates are filtered by the weight
    condition before the positivity certificate is evaluated.
    """
    if p < 1:
        raise InputError(f"p must be >= 1, got {p}")
    if r is None:
        out: list[HornTriple] = []
        for rr in range(1, p + 1):
            out.extend(horn_triples(p, rr))
        return tuple(out)
    if not 1 <= r <= p:
        raise InputError(f"need 1 <= r <= p, got r={r}, p={p}")
    subsets = list(subsets_colex(p, r))
    lam = {S: partition_from_set(S) for S in subsets}
    out = []
    for I in subsets:
        for J in subsets:
            target = weight(lam[I]) + weight(lam[J])
            for K in subsets:
                if weight(lam[K]) != target:
                    continue
                if lr_positive(lam[I], lam[J], lam[K]):
                    out.append(HornTriple(I, J, K, p))
    return tuple(out)


def essential_triples(p: int) -> tuple[HornTriple, ...]:
    """The triples whose certifying coefficient is exactly 1.

    Checking these alone already decides the full inequality system.
    """
    return tuple(
        t for t in horn_triples(p)
        if lr_coefficient(partition_from_set(t.I), partition_from_set(t.J),
                          partition_from_set(t.K)) == 1)


def triple_map_ffg(t: HornTriple) -> HornTriple:
    """Double a triple into the equal-first-components family over ``{1..2p}``.

        F = {2i - 1 : i in I} | {2j : j in J}
        G = {2k - 1 : k in K} | {2k : k in K}

    The image ``(F, F, G)`` is provably certified; the certificate is
    still re-evaluated, and a failure is a fatal internal error.
    """
    F = tuple(sorted([2 * i - 1 for i in t.I] + [2 * j for j in t.J]))
    G = tuple(sorted([2 * k - 1 for k in t.K] + [2 * k for k in t.K]))
    lam_f, lam_g = partition_from_set(F), partition_from_set(G)
    if not lr_positive(lam_f, lam_f, lam_g):
        raise RuntimeError(f"doubled triple of {t} lost positivity")
    return HornTriple(F, F, G, 2 * t.p)


@lru_cache(maxsize=None)
def _ffg_pairs(q: int, m: int) -> tuple[tuple[IndexSet, IndexSet], ...]:
    """Pairs (F, G) of m-subsets of {1..q} with (F, F, G) certified."""
    subsets = list(subsets_colex(q, m))
    lam = {S: partition_from_set(S) for S in subsets}
    out = []
    for F in subsets:
        target = 2 * weight(lam[F])
        for G in subsets:
            if weight(lam[G]) == target and lr_positive(lam[F], lam[F], lam[G]):
                out.append((F, G))
    return tuple(out)


# -- linear inequalities ----------------------------------------------------

Term = tuple[int, str, int]     # (coefficient, symbol, 1-based index)


@dataclass(frozen=True)
class LinearInequality:
    """Sparse ``lhs <= rhs`` over named, indexed variables."""

    label: str
    lhs: tuple[Term, ...]
    rhs: tuple[Term, ...]

    @staticmethod
    def _value(terms, values) -> Fraction:
        return sum((coef * values[sym][idx - 1] for coef, sym, idx in terms),
                   Fraction(0))

    def evaluate(self, values: dict[str, Sequence[Fraction]]) -> tuple[Fraction, Fraction]:
        return self._value(self.lhs, values), self._value(self.rhs, values)


@dataclass
class Violation:
    label: str
    lhs: Fraction
    rhs: Fraction

    def to_json(self) -> dict:
        return {"label": self.label, "lhs": str(self.lhs), "rhs": str(self.rhs)}


@dataclass
class CheckReport:
    """Outcome of evaluating one inequality family on one data point."""

    holds: bool
    checked: int
    min_margin: Fraction | None
    violations: list[Violation] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "holds": self.holds,
            "checked": self.checked,
            "min_margin": None if self.min_margin is None else str(self.min_margin),
            "violations": [v.to_json() for v in self.violations],
        }


def as_fraction(x) -> Fraction:
    """Exact conversion; floats map to their exact binary value."""
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, float):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise InputError(f"not a number: {x!r}")


def _coerce(values, name, *, descending=True, nonnegative=False):
    had_float = any(isinstance(x, float) for x in values)
    out = tuple(as_fraction(x) for x in values)
    if descending and any(a < b for a, b in zip(out, out[1:])):
        raise BadShapeError(f"{name} must be weakly decreasing: {values}")
    if nonnegative and any(x < 0 for x in out):
        raise BadShapeError(f"{name} must be nonnegative: {values}")
    return out, had_float


def _run(system: Sequence[LinearInequality], values, tol: Fraction) -> CheckReport:
    min_margin = None
    violations = []
    for ineq in system:
        lhs, rhs = ineq.evaluate(values)
        margin = rhs - lhs
        if min_margin is None or margin < min_margin:
            min_margin = margin
        if margin < -tol:
            violations.append(Violation(ineq.label, lhs, rhs))
    return CheckReport(not violations, len(system), min_margin, violations)


def _pick_tol(tol, had_float) -> Fraction:
    if tol is not None:
        return as_fraction(tol)
    return FLOAT_TOL if had_float else Fraction(0)


# -- family: singular values of Z versus its off-diagonal block -------------

def sv_inequalities(p: int) -> tuple[LinearInequality, ...]:
    """``2 sum_K s_k <= sum_I gamma_{2i-1} + sum_J gamma_{2j}`` per triple."""
    out = []
    for t in horn_triples(p):
        lhs = tuple((2, "s", k) for k in t.K)
        rhs = tuple((1, "gamma", 2 * i - 1) for i in t.I) + \
            tuple((1, "gamma", 2 * j) for j in t.J)
        out.append(LinearInequality(f"sv p={p} {t.describe()}", lhs, rhs))
    return tuple(out)


def check_sv(gamma, s, tol=None) -> CheckReport:
    """Test a pair of spectra against the block singular value system.

    ``gamma`` needs at least ``2p`` entries (only the top ``2p`` enter);
    both sequences must be weakly decreasing and nonnegative.
    """
    s, f1 = _coerce(s, "s", nonnegative=True)
    gamma, f2 = _coerce(gamma, "gamma", nonnegative=True)
    p = len(s)
    if p < 1 or len(gamma) < 2 * p:
        raise BadShapeError(f"need at least {2 * p} gamma values, got {len(gamma)}")
    values = {"s": s, "gamma": gamma[:2 * p]}
    return _run(sv_inequalities(p), values, _pick_tol(tol, f1 or f2))


# -- family: eigenvalues of Z versus its off-diagonal block -----------------

def offdiag_inequalities(n: int, p: int) -> tuple[LinearInequality, ...]:
    """``2 sum_K s_k <= sum_I lambda_i - sum_J lambda_{n+1-j}`` per triple."""
    if 2 * p > n:
        raise BadShapeError(f"need 2p <= n, got p={p}, n={n}")
    out = []
    for t in horn_triples(p):
        lhs = tuple((2, "s", k) for k in t.K)
        rhs = tuple((1, "lambda", i) for i in t.I) + \
            tuple((-1, "lambda", n + 1 - j) for j in t.J)
        out.append(LinearInequality(f"offdiag n={n} {t.describe()}", lhs, rhs))
    return tuple(out)


def check_offdiag(lam, s, tol=None) -> CheckReport:
    """Eigenvalues (any sign) of the big matrix against block singular values."""
    lam_v, f1 = _coerce(lam, "lambda")
    s, f2 = _coerce(s, "s", nonnegative=True)
    n, p = len(lam_v), len(s)
    system = offdiag_inequalities(n, p)
    return _run(system, {"lambda": lam_v, "s": s}, _pick_tol(tol, f1 or f2))


# -- family: merged block spectra (X and Y independent) ---------------------

def _reflect(S: IndexSet, q: int) -> IndexSet:
    return tuple(sorted(q + 1 - x for x in S))


def _truncated(sym: str, S: IndexSet, bound: int, sign: int) -> tuple[Term, ...]:
    return tuple((sign, sym, x) for x in S if x <= bound)


def pxyq_inequalities(n: int, p: int, mode: str = "ffg-only") -> tuple[LinearInequality, ...]:
    """Necessary conditions on merged off-diagonal singular values.

    ``sigma`` is the merged descending list of the two block spectra
    (length 2p), ``gamma`` the full spectrum (length n).  Triples run over
    the family on ``{1..2n}`` with size m < 2n; ``full`` evaluates

        2*(sum_{g in G, g<=2p} sigma_g - sum_{g in G', g<=2p} sigma_g)
          <= sum_{e in E, e<=n} gamma_e - sum_{e in E', e<=n} gamma_e
           + sum_{f in F, f<=n} gamma_f - sum_{f in F', f<=n} gamma_f

    with ``S' = {x : 2n+1-x in S}``, while ``ffg-only`` restricts to the
    equal-first-components triples ``(F, F, G)`` and divides by two.
    """
    if 2 * p > n:
        raise BadShapeError(f"need 2p <= n, got p={p}, n={n}")
    if mode not in ("ffg-only", "full"):
        raise InputError(f"mode must be 'ffg-only' or 'full', got {mode!r}")
    if mode == "full" and n > 4:
        raise TooLargeForFullModeError(
            f"full mode is capped at n <= 4 (the triple family over 2n={2 * n} explodes)")
    q = 2 * n
    out = []
    if mode == "full":
        for m in range(1, q):
            for t in horn_triples(q, m):
                E, F, G = t.I, t.J, t.K
                lhs = _truncated("sigma", G, 2 * p, 2) + \
                    _truncated("sigma", _reflect(G, q), 2 * p, -2)
                rhs = _truncated("gamma", E, n, 1) + \
                    _truncated("gamma", _reflect(E, q), n, -1) + \
                    _truncated("gamma", F, n, 1) + \
                    _truncated("gamma", _reflect(F, q), n, -1)
                out.append(LinearInequality(
                    f"pxyq m={m} E={format_index_set(E)},F={format_index_set(F)},"
                    f"G={format_index_set(G)}", lhs, rhs))
    else:
        for m in range(1, q):
            for F, G in _ffg_pairs(q, m):
                lhs = _truncated("sigma", G, 2 * p, 1) + \
                    _truncated("sigma", _reflect(G, q), 2 * p, -1)
                rhs = _truncated("gamma", F, n, 1) + \
                    _truncated("gamma", _reflect(F, q), n, -1)
                out.append(LinearInequality(
                    f"pxyq-ffg m={m} F={format_index_set(F)},G={format_index_set(G)}",
                    lhs, rhs))
    return tuple(out)


def check_pxyq(gamma, s, t, mode: str = "ffg-only", tol=None) -> CheckReport:
    """Necessary conditions for two prescribed blocks inside one matrix."""
    gamma, f1 = _coerce(gamma, "gamma", nonnegative=True)
    s, f2 = _coerce(s, "s", nonnegative=True)
    t, f3 = _coerce(t, "t", nonnegative=True)
    if len(s) != len(t):
        raise BadShapeError(f"s and t must have equal length, got {len(s)}, {len(t)}")
    n, p = len(gamma), len(s)
    sigma = tuple(sorted(s + t, reverse=True))
    system = pxyq_inequalities(n, p, mode)
    return _run(system, {"sigma": sigma, "gamma": gamma},
                _pick_tol(tol, f1 or f2 or f3))


def p1n2_complete(gamma1, gamma2, s1, t1) -> bool:
    """The complete system for one 2x2 matrix with both blocks prescribed.

        s1 + t1 <= gamma1 + gamma2
        s1 - t1 <= gamma1 - gamma2
        t1 - s1 <= gamma1 - gamma2

    Strictly stronger than the merged-spectrum conditions: the point
    ``(2, 1, 3/2, 0)`` passes those but fails here.
    """
    g1, g2, s1, t1 = (as_fraction(x) for x in (gamma1, gamma2, s1, t1))
    if not (g1 >= g2 >= 0 and s1 >= 0 and t1 >= 0):
        raise BadShapeError("need gamma1 >= gamma2 >= 0 and s1, t1 >= 0")
    return (s1 + t1 <= g1 + g2 and s1 - t1 <= g1 - g2 and t1 - s1 <= g1 - g2)


# -- family: eigenvalue cone of a sum with prescribed spectra ---------------

def horn_cone_inequalities(p: int) -> tuple[LinearInequality, ...]:
    """Trace equality (as two inequalities) plus ``sum_K c <= sum_I a + sum_J b``."""
    full_c = tuple((1, "c", k) for k in range(1, p + 1))
    full_ab = tuple((1, "a", i) for i in range(1, p + 1)) + \
        tuple((1, "b", j) for j in range(1, p + 1))
    out = [LinearInequality("trace<=", full_c, full_ab),
           LinearInequality("trace>=", full_ab, full_c)]
    for r in range(1, p):
        for t in horn_triples(p, r):
            lhs = tuple((1, "c", k) for k in t.K)
            rhs = tuple((1, "a", i) for i in t.I) + tuple((1, "b", j) for j in t.J)
            out.append(LinearInequality(f"cone {t.describe()}", lhs, rhs))
    return tuple(out)


def horn_cone_membership(a, b, c, tol=None) -> CheckReport:
    """Is ``c`` the spectrum of a sum of matrices with spectra ``a`` and ``b``?"""
    a, f1 = _coerce(a, "a")
    b, f2 = _coerce(b, "b")
    c, f3 = _coerce(c, "c")
    if not len(a) == len(b) == len(c) >= 1:
        raise BadShapeError(
            f"a, b, c must have equal positive length, got {len(a)}, {len(b)}, {len(c)}")
    values = {"a": a, "b": b, "c": c}
    return _run(horn_cone_inequalities(len(a)), values, _pick_tol(tol, f1 or f2 or f3))


@dataclass(frozen=True)
class CombinedCone:
    """Eigenvalue cone of ``A + B`` when only the merged spectrum is fixed.

    The odd/even interlace splitting of the merged list gives the unique
    splitting whose cone contains every other one.
    """

    gamma: tuple[Fraction, ...]
    a: tuple[Fraction, ...]
    b: tuple[Fraction, ...]
    inequalities: tuple[LinearInequality, ...]

    def membership(self, c, tol=None) -> CheckReport:
        return horn_cone_membership(self.a, self.b, c, tol=tol)


def combined_spectrum_cone(gamma) -> CombinedCone:
    """Cone for the interlace splitting of a merged spectrum of length 2p."""
    gamma, _ = _coerce(gamma, "gamma")
    a, b = interlace_split(gamma)
    return CombinedCone(gamma, a, b, horn_cone_inequalities(len(a)))
