"""Desk-scale dense symmetric eigenvalues and the random sampling harness.

Matrices are plain lists of row lists.  Eigenvalues come from cyclic
Jacobi rotations (simple and provably convergent at these sizes; no
linear-algebra dependency), singular values from the symmetric embedding
``[[0, X], [X^T, 0]]`` whose spectrum is plus/minus the singular values
padded with zeros.  Random orthogonal conjugation plants prescribed
spectra, and the ``sample_verify_*`` functions stress the combinatorial
inequality checkers on random matrices: the statements being exercised
are proved, so any reported violation is an implementation bug.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Sequence

from .errors import BadShapeError, BadTError, DimensionMismatchError, NoConvergenceError
from .horn import check_offdiag, check_sv, combined_spectrum_cone

Matrix = list[list[float]]

DEFAULT_TOL = 1e-9
_OFF_NORM_FACTOR = 1e-14
_MAX_SWEEPS = 100


def symmetrize(m: Sequence[Sequence[float]]) -> Matrix:
    n = len(m)
    if any(len(row) != n for row in m):
        raise DimensionMismatchError("matrix must be square")
    return [[(m[i][j] + m[j][i]) / 2.0 for j in range(n)] for i in range(n)]


def frobenius_norm(m: Sequence[Sequence[float]]) -> float:
    return math.sqrt(sum(x * x for row in m for x in row))


def eigenvalues_sym(m: Sequence[Sequence[float]],
                    max_sweeps: int = _MAX_SWEEPS) -> list[float]:
    """Eigenvalues of a symmetric matrix, descending, by cyclic Jacobi.

    Sweeps rotate every off-diagonal pair until the off-diagonal Frobenius
    norm drops below ``1e-14`` times the norm of the input.
    """
    a = symmetrize(m)
    n = len(a)
    if n == 0:
        return []
    norm = frobenius_norm(a)
    if norm == 0.0:
        return [0.0] * n
    threshold = _OFF_NORM_FACTOR * norm
    for _ in range(max_sweeps):
        off = math.sqrt(sum(a[i][j] ** 2 for i in range(n)
                            for j in range(n) if i != j))
        if off < threshold:
            return sorted((a[i][i] for i in range(n)), reverse=True)
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p][q]
                if apq == 0.0:
                    continue
                tau = (a[q][q] - a[p][p]) / (2.0 * apq)
                t = (1.0 if tau >= 0 else -1.0) / (abs(tau) + math.hypot(tau, 1.0))
                c = 1.0 / math.hypot(t, 1.0)
                s = t * c
                app, aqq = a[p][p], a[q][q]
                a[p][p] = app - t * apq
                a[q][q] = aqq + t * apq
                a[p][q] = a[q][p] = 0.0
                for k in range(n):
                    if k in (p, q):
                        continue
                    akp, akq = a[k][p], a[k][q]
                    a[k][p] = a[p][k] = c * akp - s * akq
                    a[k][q] = a[q][k] = s * akp + c * akq
    raise NoConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps")


def singular_values(m: Sequence[Sequence[float]]) -> list[float]:
    """Singular values, descending, via the symmetric zero-block embedding."""
    rows = len(m)
    cols = len(m[0]) if rows else 0
    if any(len(row) != cols for row in m):
        raise DimensionMismatchError("ragged matrix")
    n = rows + cols
    embed = [[0.0] * n for _ in range(n)]
    for i in range(rows):
        for j in range(cols):
            embed[i][rows + j] = embed[rows + j][i] = float(m[i][j])
    eig = eigenvalues_sym(embed)
    return [max(v, 0.0) for v in eig[:min(rows, cols)]]


def random_orthogonal(n: int, rng: random.Random) -> Matrix:
    """Product of one random plane rotation per index pair."""
    q = [[1.0 if i == j else 0.0 for j in range(n)] for i in range(n)]
    for i in range(n - 1):
        for j in range(i + 1, n):
            theta = rng.uniform(0.0, 2.0 * math.pi)
            c, s = math.cos(theta), math.sin(theta)
            for k in range(n):
                qki, qkj = q[k][i], q[k][j]
                q[k][i] = c * qki - s * qkj
                q[k][j] = s * qki + c * qkj
    return q


def random_with_spectrum(d: Sequence[float], seed) -> Matrix:
    """A symmetric matrix with eigenvalues ``d``, by orthogonal conjugation.

    A constant spectrum is conjugation invariant, so that case returns the
    scalar matrix exactly.
    """
    d = [float(x) for x in d]
    n = len(d)
    if n == 0:
        return []
    if all(x == d[0] for x in d):
        return [[d[0] if i == j else 0.0 for j in range(n)] for i in range(n)]
    rng = random.Random(f"{seed}:spectrum")
    q = random_orthogonal(n, rng)
    return [[sum(q[i][k] * d[k] * q[j][k] for k in range(n)) for j in range(n)]
            for i in range(n)]


def embed_blocks(P, X, Y, Q) -> Matrix:
    """Assemble ``[[P, X], [Y, Q]]`` with conformability checks."""
    p = len(P)
    m = len(Q)
    if any(len(row) != p for row in P) or any(len(row) != m for row in Q):
        raise DimensionMismatchError("diagonal blocks must be square")
    if len(X) != p or any(len(row) != m for row in X):
        raise DimensionMismatchError(f"X must be {p}x{m}")
    if len(Y) != m or any(len(row) != p for row in Y):
        raise DimensionMismatchError(f"Y must be {m}x{p}")
    if p > m:
        raise DimensionMismatchError(f"need 2p <= n, got p={p}, n={p + m}")
    top = [list(map(float, P[i])) + list(map(float, X[i])) for i in range(p)]
    bottom = [list(map(float, Y[i])) + list(map(float, Q[i])) for i in range(m)]
    return top + bottom


def rotation_assembly(A, B, t: float) -> Matrix:
    """Conjugate ``diag(A, B)`` by the block rotation with ``sin(2 theta) = t``.

    Written out blockwise the result is

        [[c^2 A + s^2 B,  cs (A - B)],
         [cs (A - B),     s^2 A + c^2 B]]

    so the spectrum is that of ``diag(A, B)`` and the off-diagonal block is
    ``(t/2)(A - B)``.
    """
    if not 0.0 <= t <= 1.0:
        raise BadTError(f"t must be in [0, 1], got {t}")
    p = len(A)
    if len(B) != p or any(len(row) != p for row in list(A) + list(B)):
        raise DimensionMismatchError("A and B must be square of equal size")
    theta = 0.5 * math.asin(t)
    c, s = math.cos(theta), math.sin(theta)
    cc, ss, cs = c * c, s * s, c * s
    out = [[0.0] * (2 * p) for _ in range(2 * p)]
    for i in range(p):
        for j in range(p):
            out[i][j] = cc * A[i][j] + ss * B[i][j]
            out[p + i][p + j] = ss * A[i][j] + cc * B[i][j]
            out[i][p + j] = out[p + j][i] = cs * (A[i][j] - B[i][j])
    return out


@dataclass
class SpectralReport:
    """Outcome of one randomized verification run."""

    kind: str
    p: int
    n: int
    trials: int
    seed: int
    tol: float
    min_margin: float | None = None
    worst_trial: int | None = None
    worst_spectra: dict = field(default_factory=dict)
    margins: list[float] = field(default_factory=list)
    violations: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def record(self, trial: int, report, spectra: dict):
        margin = float(report.min_margin)
        self.margins.append(margin)
        if self.min_margin is None or margin < self.min_margin:
            self.min_margin = margin
            self.worst_trial = trial
            self.worst_spectra = {k: [float(x) for x in v]
                                  for k, v in spectra.items()}
        for v in report.violations:
            self.violations.append({"trial": trial, "label": v.label,
                                    "lhs": float(v.lhs), "rhs": float(v.rhs)})

    def to_json(self) -> dict:
        return {"kind": self.kind, "p": self.p, "n": self.n,
                "trials": self.trials, "seed": self.seed, "tol": self.tol,
                "ok": self.ok, "min_margin": self.min_margin,
                "worst_trial": self.worst_trial,
                "worst_spectra": self.worst_spectra,
                "margins": self.margins,
                "violations": self.violations}


def _trial_rng(seed, trial: int) -> random.Random:
    return random.Random(f"{seed}:{trial}")


def random_symmetric(n: int, rng: random.Random, scale: float = 5.0) -> Matrix:
    m = [[rng.uniform(-scale, scale) for _ in range(n)] for _ in range(n)]
    return symmetrize(m)


def _upper_right_block(z: Matrix, p: int) -> Matrix:
    return [row[p:] for row in z[:p]]


def _check_pn(p: int, n: int):
    if not (1 <= p and 2 * p <= n <= 8):
        raise BadShapeError(f"need 1 <= p, 2p <= n <= 8; got p={p}, n={n}")


def sample_verify_theorem1(p: int, n: int, trials: int, seed,
                           tol: float = DEFAULT_TOL) -> SpectralReport:
    """Singular values of random symmetric Z against its off-diagonal block."""
    _check_pn(p, n)
    out = SpectralReport("sv-block", p, n, trials, seed, tol)
    for trial in range(trials):
        z = random_symmetric(n, _trial_rng(seed, trial))
        gamma = singular_values(z)[:2 * p]
        s = singular_values(_upper_right_block(z, p))
        rep = check_sv(gamma, s, tol=tol)
        out.record(trial, rep, {"gamma": gamma, "s": s})
    return out


def sample_verify_offdiag(p: int, n: int, trials: int, seed,
                          tol: float = DEFAULT_TOL) -> SpectralReport:
    """Eigenvalues of random symmetric Z against its off-diagonal block."""
    _check_pn(p, n)
    out = SpectralReport("eig-offdiag", p, n, trials, seed, tol)
    for trial in range(trials):
        z = random_symmetric(n, _trial_rng(seed, trial))
        lam = eigenvalues_sym(z)
        s = singular_values(_upper_right_block(z, p))
        rep = check_offdiag(lam, s, tol=tol)
        out.record(trial, rep, {"lambda": lam, "s": s})
    return out


def sample_verify_combined_cone(p: int, trials: int, seed,
                                tol: float = DEFAULT_TOL) -> SpectralReport:
    """Spectrum of A + B against the merged-spectrum eigenvalue cone."""
    if not 1 <= p <= 4:
        raise BadShapeError(f"need 1 <= p <= 4, got p={p}")
    out = SpectralReport("cone-sum", p, 2 * p, trials, seed, tol)
    for trial in range(trials):
        rng = _trial_rng(seed, trial)
        a_mat = random_symmetric(p, rng)
        b_mat = random_symmetric(p, rng)
        gamma = sorted(eigenvalues_sym(a_mat) + eigenvalues_sym(b_mat),
                       reverse=True)
        total = [[a_mat[i][j] + b_mat[i][j] for j in range(p)] for i in range(p)]
        c = eigenvalues_sym(total)
        rep = combined_spectrum_cone(gamma).membership(c, tol=tol)
        out.record(trial, rep, {"gamma": gamma, "c": c})
    return out
