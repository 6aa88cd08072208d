"""Adjacency spectra and the quantities derived from them.

Eigenvalues come from LAPACK's symmetric driver by default; a cyclic Jacobi
solver is kept alongside as an independent route for cross-checking.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .graph import Graph

ZERO_TOL_FACTOR = 1e-9
MAJORIZATION_SLACK = 1e-12
JACOBI_TOL = 1e-12
JACOBI_MAX_SWEEPS = 64


class EigenSolverError(RuntimeError):
    pass


class Inertia(NamedTuple):
    n_plus: int
    n_zero: int
    n_minus: int


@dataclass(frozen=True)
class Spectrum:
    values: np.ndarray  # non-increasing
    zero_tol: float

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def radius(self) -> float:
        return float(self.values[0]) if self.n else 0.0

    def __getitem__(self, i: int) -> float:
        """1-based access: ``s[1]`` is the largest eigenvalue."""
        return float(self.values[i - 1])


def default_zero_tol(n: int, lambda1: float) -> float:
    return n * ZERO_TOL_FACTOR * max(1.0, lambda1)


def jacobi_eigenvalues(a: np.ndarray, tol: float = JACOBI_TOL, max_sweeps: int = JACOBI_MAX_SWEEPS) -> np.ndarray:
    """Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.

    Stops once every off-diagonal entry is below ``tol`` times the Frobenius norm.
    """
    a = np.array(a, dtype=np.float64, copy=True)
    n = a.shape[0]
    if n <= 1:
        return np.sort(np.diag(a))[::-1].copy()
    threshold = tol * np.linalg.norm(a)
    iu = np.triu_indices(n, 1)
    for _ in range(max_sweeps):
        if np.max(np.abs(a[iu]), initial=0.0) <= threshold:
            return np.sort(np.diag(a))[::-1].copy()
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= threshold * 1e-3:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(1.0, theta))
                c = 1.0 / math.hypot(1.0, t)
                s = t * c
                ap = a[:, p].copy()
                aq = a[:, q].copy()
                a[:, p] = c * ap - s * aq
                a[:, q] = s * ap + c * aq
                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                a[p, q] = a[q, p] = 0.0
    raise EigenSolverError(f"Jacobi did not converge within {max_sweeps} sweeps (n={n})")


def eigenvalues(g: Graph, method: str = "lapack", zero_tol_scale: float = 1.0) -> Spectrum:
    if g.n < 1:
        raise ValueError("spectrum needs at least one vertex")
    a = g.adjacency_matrix()
    if method == "lapack":
        vals = np.linalg.eigvalsh(a)[::-1].copy()
    elif method == "jacobi":
        vals = jacobi_eigenvalues(a)
    else:
        raise ValueError(f"unknown eigensolver {method!r}")
    vals.setflags(write=False)
    return Spectrum(vals, zero_tol_scale * default_zero_tol(g.n, float(vals[0])))


def inertia(s: Spectrum, tol: float | None = None) -> Inertia:
    tol = s.zero_tol if tol is None else tol
    v = s.values
    plus = int(np.count_nonzero(v > tol))
    minus = int(np.count_nonzero(v < -tol))
    return Inertia(plus, len(v) - plus - minus, minus)


def inertia_is_stable(s: Spectrum, factor: float = 10.0) -> bool:
    """Whether the inertia survives widening the zero tolerance by ``factor``."""
    return inertia(s) == inertia(s, s.zero_tol * factor)


def square_sum(s: Spectrum, k: int) -> float:
    """Sum of the squares of the ``k`` largest eigenvalues."""
    if not 1 <= k <= s.n:
        raise ValueError(f"prefix length {k} outside [1, {s.n}]")
    head = s.values[:k]
    return float(np.dot(head, head))


def lambda_ratio(s: Spectrum, k: int, m: int) -> float:
    if m < 1:
        raise ValueError("ratio undefined for edgeless graphs")
    return square_sum(s, k) / m


def power_sum(s: Spectrum, p: int) -> float:
    if p < 1:
        raise ValueError("power must be a positive integer")
    return float(np.sum(s.values ** p))


def p_norm(x: Sequence[float], p: float) -> float:
    if p < 1:
        raise ValueError(f"p-norm needs p >= 1, got {p}")
    arr = np.abs(np.asarray(x, dtype=np.float64))
    if arr.size == 0:
        return 0.0
    scale = arr.max()
    if scale == 0.0:
        return 0.0
    return float(scale * np.sum((arr / scale) ** p) ** (1.0 / p))


def is_weakly_majorized(y: Sequence[float], x: Sequence[float], slack: float = MAJORIZATION_SLACK) -> bool:
    """True iff ``y`` is weakly majorized by ``x``: prefix sums of sorted ``y`` never exceed those of ``x``."""
    ya = np.asarray(y, dtype=np.float64)
    xa = np.asarray(x, dtype=np.float64)
    size = max(len(ya), len(xa))
    ya = np.sort(np.pad(ya, (0, size - len(ya))))[::-1]
    xa = np.sort(np.pad(xa, (0, size - len(xa))))[::-1]
    return bool(np.all(np.cumsum(ya) <= np.cumsum(xa) + slack))
