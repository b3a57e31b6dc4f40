"""Numerical adjacency spectra and the multiplicity argument for eigenvalue bounds.

The key mechanism: for a k-regular graph ``trace(A^2) = v k``, so an
eigenvalue ``theta != k`` of multiplicity ``t`` obeys ``t theta^2 <= v k``.
Large multiplicities therefore force a small second eigenvalue.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import AmbiguousClustering, SizeLimit
from .graph import MAX_VERTICES, Graph

DEFAULT_TOL = 1e-6


@dataclass(frozen=True)
class NumericSpectrum:
    eigenvalues: tuple[float, ...]  # non-increasing
    tol: float = DEFAULT_TOL

    def __len__(self):
        return len(self.eigenvalues)

    @property
    def trace(self) -> float:
        return math.fsum(self.eigenvalues)

    @property
    def trace_of_square(self) -> float:
        return math.fsum(x * x for x in self.eigenvalues)


def jacobi_eigenvalues(a: np.ndarray, rel_tol: float = 1e-12, max_sweeps: int = 60) -> np.ndarray:
    """Eigenvalues of a dense symmetric matrix by cyclic Jacobi rotations.

    Stops once the off-diagonal Frobenius norm drops below
    ``rel_tol * ||A||_F``.  Pure numpy, O(v^2) rotations per sweep, so only
    sensible for a few hundred vertices.
    """
    a = np.array(a, dtype=float)
    n = a.shape[0]
    if n <= 1:
        return a.diagonal().copy()
    target = rel_tol * np.linalg.norm(a)
    for _ in range(max_sweeps):
        off = np.linalg.norm(a - np.diag(np.diag(a)))  # direct, not ||A||^2 - ||diag||^2
        if off <= target:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                g = 100.0 * abs(apq)
                if abs(a[p, p]) + g == abs(a[p, p]) and abs(a[q, q]) + g == abs(a[q, q]):
                    # below rounding of both diagonal entries: drop it
                    a[p, q] = a[q, p] = 0.0
                    continue
                theta = (a[q, q] - a[p, p]) / (2 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta  # theta^2 would overflow
                else:
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1))
                c = 1 / math.sqrt(t * t + 1)
                s = t * c
                ap, aq = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * ap - s * aq
                a[:, q] = s * ap + c * aq
                rp, rq = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
    else:
        raise RuntimeError("Jacobi iteration did not converge")
    return np.diag(a).copy()


def spectrum(g: Graph, method: str = "lapack", tol: float = DEFAULT_TOL) -> NumericSpectrum:
    """All ``v`` adjacency eigenvalues, non-increasing.

    ``method="lapack"`` uses ``numpy.linalg.eigvalsh``; ``method="jacobi"``
    uses :func:`jacobi_eigenvalues`.
    """
    if g.v > MAX_VERTICES:
        raise SizeLimit(f"{g.v} vertices exceeds {MAX_VERTICES}")
    a = g.adjacency_matrix(dtype=float)
    if method == "lapack":
        vals = np.linalg.eigvalsh(a) if g.v else np.zeros(0)
    elif method == "jacobi":
        vals = jacobi_eigenvalues(a)
    else:
        raise ValueError(f"unknown eigensolver {method!r}")
    vals = np.sort(vals)[::-1]
    return NumericSpectrum(tuple(float(x) for x in vals), tol)


def second_eigenvalue(g: Graph, spec: NumericSpectrum | None = None) -> float:
    """``max(|lambda_2|, |lambda_v|)``."""
    ev = (spec or spectrum(g)).eigenvalues
    if len(ev) < 2:
        return 0.0
    return max(abs(ev[1]), abs(ev[-1]))


def eigen_multiplicities(
    spec: NumericSpectrum | Sequence[float],
    tol: float | None = None,
    snap: Iterable[float] = (),
) -> list[tuple[float, int]]:
    """Group eigenvalues into ``(value, multiplicity)`` clusters, largest first.

    Consecutive sorted eigenvalues within ``tol`` share a cluster.  Values
    in ``snap`` (exact eigenvalues known a priori) replace cluster means
    they lie within ``tol`` of.
    """
    if isinstance(spec, NumericSpectrum):
        values, tol = spec.eigenvalues, tol if tol is not None else spec.tol
    else:
        values, tol = tuple(spec), tol if tol is not None else DEFAULT_TOL
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    xs = sorted(values, reverse=True)
    clusters: list[list[float]] = []
    for x in xs:
        if clusters and clusters[-1][-1] - x <= tol:
            clusters[-1].append(x)
        else:
            clusters.append([x])
    out = []
    for c in clusters:
        out.append((math.fsum(c) / len(c), len(c)))
    for (a, _), (b, _) in zip(out, out[1:]):
        if a - b < 2 * tol:
            raise AmbiguousClustering(f"clusters at {a} and {b} are closer than 2*tol = {2 * tol}")
    snap = list(snap)
    if snap:
        snapped = []
        for value, mult in out:
            close = [e for e in snap if abs(e - value) <= tol]
            snapped.append((close[0] if close else value, mult))
        out = snapped
    return out


def commutation_check(g: Graph, perm: Sequence[int]) -> bool:
    """True iff the permutation matrix of ``perm`` commutes with the adjacency matrix."""
    v = g.v
    if sorted(perm) != list(range(v)):
        raise ValueError("perm must be a bijection of 0..v-1")
    a = g.adjacency_matrix()
    p = np.zeros((v, v), dtype=np.int64)
    p[np.arange(v), np.asarray(perm)] = 1
    return bool(np.array_equal(p @ a, a @ p))


@dataclass(frozen=True)
class GapBound:
    t_min: int
    bound: float
    Lambda: float
    holds: bool
    clusters: tuple[tuple[float, int], ...]

    def kernel_violations(self, v: int, k: int, slack: float = 1e-9) -> list[tuple[float, int]]:
        """Clusters other than ``k`` with ``t * theta^2 > v k``."""
        return [(x, t) for x, t in self.clusters[1:] if t * x * x > v * k * (1 + slack)]


def multiplicity_gap_bound(g: Graph, tol: float = DEFAULT_TOL, snap: Iterable[float] = ()) -> GapBound:
    """``Lambda <= sqrt(v k / t_min)`` where ``t_min`` is the smallest non-principal multiplicity."""
    k = g.regular_degree()
    if k is None:
        raise ValueError("graph must be regular")
    g.require_connected()
    spec = spectrum(g, tol=tol)
    clusters = eigen_multiplicities(spec, snap=snap)
    rest = clusters[1:]
    if not rest:
        raise ValueError("graph has a single eigenvalue")
    t_min = min(t for _, t in rest)
    bound = math.sqrt(g.v * k / t_min)
    lam = second_eigenvalue(g, spec)
    return GapBound(t_min, bound, lam, lam <= bound * (1 + 1e-12), tuple(clusters))
