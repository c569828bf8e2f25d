"""Exhaustive desk-scale sweeps over the domination statements.

Three sweeps: the star rearrangement conjecture (coefficients never drop
after the rearrangement), merged-spectrum Schur domination (support
containment of the interlace splitting is proved, coefficientwise
domination is the open part), and the doubling-map domination (proved;
checked through the classical rule and through the dilation injection).

Sweeps walk pairs in increasing combined weight so partial runs mean
something, and checkpoint a cursor file every ``CHECKPOINT_EVERY`` pairs
so interrupted runs resume instead of starting over.  Any violation is
recorded with enough data to replay it against the classical rule alone.
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

from .domino import count_ydt_by_weight, dilate_tableau, enumerate_domino_tableaux, is_valid_ydt
from .errors import BadShapeError, BudgetExceededError, NonTerminationError
from .lr import lr_coefficient, schur_product
from .partitions import (
    Partition,
    interlace_split,
    part,
    partition,
    partitions_in_box,
    partitions_of,
    star_pair,
    tau_partitions,
    weight,
)

CHECKPOINT_EVERY = 1000
PASS, VIOLATION, BUDGET = "pass", "violation", "budget-exhausted"


@dataclass
class SweepReport:
    params: dict
    pairs_examined: int = 0
    violations: list[dict] = field(default_factory=list)
    wall_time: float = 0.0
    status: str = PASS

    def record(self, **violation):
        self.violations.append({k: list(v) if isinstance(v, tuple) else v
                                for k, v in violation.items()})
        self.status = VIOLATION

    def to_json(self) -> dict:
        return {"params": self.params, "pairs_examined": self.pairs_examined,
                "violations": self.violations,
                "wall_time": round(self.wall_time, 3), "status": self.status}


class _Cursor:
    """Resumable progress stored as a small JSON file."""

    def __init__(self, path, signature):
        self.path = path
        self.signature = signature
        self.next_index = 0
        self.pairs = 0
        self.violations: list[dict] = []
        self.elapsed = 0.0
        if path and os.path.exists(path):
            with open(path) as fh:
                data = json.load(fh)
            if data.get("signature") != signature:
                raise BadShapeError(
                    f"cursor file {path} belongs to a different sweep: "
                    f"{data.get('signature')}")
            self.next_index = data["next_index"]
            self.pairs = data["pairs"]
            self.violations = data["violations"]
            self.elapsed = data.get("elapsed", 0.0)

    def save(self, next_index, pairs, violations, elapsed):
        self.next_index = next_index
        self.pairs = pairs
        self.violations = violations
        self.elapsed = elapsed
        if self.path:
            with open(self.path, "w") as fh:
                json.dump({"signature": self.signature,
                           "next_index": next_index, "pairs": pairs,
                           "violations": violations, "elapsed": elapsed}, fh)


def _pairs_by_weight(shapes):
    pairs = [(lam, mu) for lam in shapes for mu in shapes]
    pairs.sort(key=lambda lm: (weight(lm[0]) + weight(lm[1]), lm))
    return pairs


def _star_violations(lam, mu, parts):
    lam_s, mu_s = star_pair(lam, mu, parts)
    if (lam_s, mu_s) == (lam, mu):
        return []
    base = schur_product(lam, mu)
    starred = schur_product(lam_s, mu_s)
    out = []
    for nu, coeff in base:
        upper = starred[nu]
        if coeff > upper:
            out.append({"kind": "star", "lam": list(lam), "mu": list(mu),
                        "nu": list(nu), "lhs": coeff, "rhs": upper})
    return out


def _star_chunk(args):
    p, q, lo, hi = args
    pairs = _pairs_by_weight(list(partitions_in_box(p, q)))[lo:hi]
    out = []
    for lam, mu in pairs:
        out.extend(_star_violations(lam, mu, p))
    return out


def verify_star_conjecture(p: int, q: int, checkpoint: str | None = None,
                           threads: int = 1) -> SweepReport:
    """Coefficientwise domination after the star rearrangement, over a box.

    Sweeps every ordered pair of partitions inside the ``p x q`` box.  The
    box area is capped at 16: this replicates the reported experimental
    frontier at desk scale rather than reproducing it.
    """
    if p * q > 16:
        raise BudgetExceededError(
            f"box area {p * q} exceeds the desk budget of 16")
    started = time.monotonic()
    cursor = _Cursor(checkpoint, {"sweep": "star", "p": p, "q": q})
    pairs = _pairs_by_weight(list(partitions_in_box(p, q)))
    report = SweepReport({"sweep": "star", "p": p, "q": q})
    report.violations = list(cursor.violations)
    report.pairs_examined = cursor.pairs
    idx = cursor.next_index
    base_elapsed = cursor.elapsed

    def progress(new_idx):
        cursor.save(new_idx, report.pairs_examined, report.violations,
                    base_elapsed + time.monotonic() - started)

    if threads > 1:
        chunk = max(1, (len(pairs) - idx + 4 * threads - 1) // (4 * threads))
        spans = [(p, q, lo, min(lo + chunk, len(pairs)))
                 for lo in range(idx, len(pairs), chunk)]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            for span, found in zip(spans, pool.map(_star_chunk, spans)):
                report.violations.extend(found)
                report.pairs_examined += span[3] - span[2]
                progress(span[3])
    else:
        for i in range(idx, len(pairs)):
            lam, mu = pairs[i]
            report.violations.extend(_star_violations(lam, mu, p))
            report.pairs_examined += 1
            if (i + 1) % CHECKPOINT_EVERY == 0:
                progress(i + 1)
        progress(len(pairs))

    if report.violations:
        report.status = VIOLATION
    report.wall_time = cursor.elapsed
    return report


def _splittings(gamma, p):
    """Distinct ways to split the padded parts into two p-part partitions."""
    padded = tuple(part(gamma, i) for i in range(1, 2 * p + 1))
    seen = set()
    for idx in combinations(range(2 * p), p):
        lam = partition(sorted((padded[i] for i in idx), reverse=True))
        mu = partition(sorted((padded[i] for i in range(2 * p) if i not in idx),
                              reverse=True))
        key = tuple(sorted((lam, mu)))
        if key not in seen:
            seen.add(key)
            yield lam, mu


def verify_schur_domination(gamma: Partition, p: int | None = None) -> SweepReport:
    """Every splitting of a merged spectrum against the interlace splitting.

    Support containment is a proved statement, so a support violation is
    an implementation bug; the coefficientwise comparison is the open
    conjecture and is what the sweep status reports.
    """
    gamma = partition(gamma)
    if p is None:
        p = max(1, (len(gamma) + 1) // 2)
    if len(gamma) > 2 * p:
        raise BadShapeError(f"{gamma} has more than {2 * p} parts")
    if weight(gamma) > 16 or p > 4:
        raise BudgetExceededError(
            f"budget is |gamma| <= 16 and p <= 4, got {weight(gamma)}, p={p}")
    started = time.monotonic()
    report = SweepReport({"sweep": "domination", "gamma": list(gamma), "p": p})
    padded = tuple(part(gamma, i) for i in range(1, 2 * p + 1))
    tilde_lam, tilde_mu = (partition(s) for s in interlace_split(padded))
    best = schur_product(tilde_lam, tilde_mu)
    for lam, mu in _splittings(gamma, p):
        report.pairs_examined += 1
        if (lam, mu) == (tilde_lam, tilde_mu):
            continue
        exp = schur_product(lam, mu)
        for nu, coeff in exp:
            upper = best[nu]
            if upper == 0:
                report.record(kind="support", lam=lam, mu=mu, nu=nu,
                              lhs=coeff, rhs=0)
            elif coeff > upper:
                report.record(kind="coefficient", lam=lam, mu=mu, nu=nu,
                              lhs=coeff, rhs=upper)
    report.wall_time = time.monotonic() - started
    return report


def verify_tau_domination(bound: int) -> SweepReport:
    """Doubling-map domination for all pairs up to a combined weight.

    Proved statement; checked twice per pair: coefficients on both sides
    through the classical rule, and constructively by dilating every
    Yamanouchi tableau of the doubled pair shape and checking the images
    stay valid and distinct.
    """
    if bound > 8:
        raise BudgetExceededError(f"bound {bound} exceeds the desk budget of 8")
    started = time.monotonic()
    report = SweepReport({"sweep": "tau", "max_weight": bound})
    for total in range(bound + 1):
        for wl in range(total + 1):
            for lam in partitions_of(wl):
                for mu in partitions_of(total - wl):
                    report.pairs_examined += 1
                    rho = tau_partitions(lam, mu)
                    census = count_ydt_by_weight(rho)
                    images = set()
                    for t in enumerate_domino_tableaux(rho, yamanouchi=True):
                        image = dilate_tableau(t)
                        if not is_valid_ydt(image):
                            report.record(kind="dilation", lam=lam, mu=mu,
                                          nu=t.weight(), lhs=1, rhs=0)
                        images.add(image)
                    if len(images) != sum(census.values()):
                        report.record(kind="injectivity", lam=lam, mu=mu,
                                      nu=None, lhs=sum(census.values()),
                                      rhs=len(images))
                    for nu in partitions_of(total):
                        lhs = lr_coefficient(lam, mu, nu)
                        if census.get(nu, 0) != lhs:
                            report.record(kind="rule-equivalence", lam=lam,
                                          mu=mu, nu=nu, lhs=lhs,
                                          rhs=census.get(nu, 0))
                        rhs = lr_coefficient(rho, rho, tau_partitions(nu, nu))
                        if lhs > rhs:
                            report.record(kind="tau", lam=lam, mu=mu, nu=nu,
                                          lhs=lhs, rhs=rhs)
    report.wall_time = time.monotonic() - started
    return report


def replay_violation(record: dict) -> bool:
    """Recompute a violation record through the classical rule alone.

    True when the recorded sides match a fresh computation, so a reported
    counterexample can be audited without trusting the sweep that found
    it.  Supports the record kinds the sweeps emit.
    """
    lam = partition(record["lam"])
    mu = partition(record["mu"])
    nu = partition(record["nu"]) if record.get("nu") is not None else None
    kind = record["kind"]
    if kind == "star":
        parts = max(len(lam), len(mu), 1)
        lam_s, mu_s = star_pair(lam, mu, parts)
        return (lr_coefficient(lam, mu, nu) == record["lhs"]
                and lr_coefficient(lam_s, mu_s, nu) == record["rhs"])
    if kind in ("support", "coefficient"):
        merged = tuple(sorted(lam + mu, reverse=True))
        if len(merged) % 2:
            merged += (0,)
        tilde_lam, tilde_mu = (partition(s) for s in interlace_split(merged))
        return (lr_coefficient(lam, mu, nu) == record["lhs"]
                and lr_coefficient(tilde_lam, tilde_mu, nu) == record["rhs"])
    if kind == "tau":
        rho = tau_partitions(lam, mu)
        return (lr_coefficient(lam, mu, nu) == record["lhs"]
                and lr_coefficient(rho, rho, tau_partitions(nu, nu)) == record["rhs"])
    if kind == "rule-equivalence":
        return lr_coefficient(lam, mu, nu) == record["lhs"]
    return False


def _prefix_length(lam, mu, parts):
    seq = []
    for k in range(1, parts + 1):
        seq.append(part(mu, k))
        seq.append(part(lam, k))
    k = 1
    while k < len(seq) and seq[k] <= seq[k - 1]:
        k += 1
    return k, seq


def star_orbit(lam: Partition, mu: Partition, parts: int | None = None,
               max_steps: int = 10_000) -> list[tuple[Partition, Partition]]:
    """Iterate the star rearrangement until its fixed point.

    Along the way the longest weakly decreasing prefix of the interleaved
    part sequence must keep its first k-1 terms, strictly increase its
    k-th, and never shrink; a cap on the step count guards the claimed
    termination.
    """
    lam, mu = partition(lam), partition(mu)
    if parts is None:
        parts = max(len(lam), len(mu), 1)
    orbit = [(lam, mu)]
    while True:
        k, seq = _prefix_length(lam, mu, parts)
        if k == 2 * parts:
            return orbit
        nxt = star_pair(lam, mu, parts)
        if nxt == (lam, mu):
            return orbit
        if len(orbit) > max_steps:
            raise NonTerminationError(
                f"no fixed point within {max_steps} steps from {orbit[0]}")
        k2, seq2 = _prefix_length(*nxt, parts)
        if seq2[:k - 1] != seq[:k - 1] or seq2[k - 1] <= seq[k - 1] or k2 < k:
            raise RuntimeError(
                f"monotonicity of the rearrangement failed at {lam}, {mu}")
        lam, mu = nxt
        orbit.append(nxt)
