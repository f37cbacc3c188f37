"""Symmetric eigensolver and Gershgorin-style eigenvalue bounds.

The eigensolver is a plain cyclic Jacobi iteration: dimensions here stay at
or below ~110, where O(n^3) sweeps are immediate and the result is
deterministic across platforms.  The bounding side implements the plain
row-sum bound and the iterated weighted row-sum bound: starting from caps
b = 1, each step replaces b_j by min(1, (sum_l |a_jl| b_l) / mu); if some
step's weighted maximal row sum drops below mu, every eigenvalue is < mu.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Union

import numpy as np

from .curvature import PairBoundMatrix


class NoConvergence(RuntimeError):
    """Jacobi sweeps did not reach the off-diagonal tolerance."""


class EmptyInput(ValueError):
    """An eigenvalue bound needs at least one row."""


class NonpositiveMu(ValueError):
    """The weighted row-sum iteration needs mu > 0."""


MatrixLike = Union[np.ndarray, PairBoundMatrix]


@dataclass
class SpectralSummary:
    """Descending eigenvalues of a symmetric matrix."""

    eigenvalues: np.ndarray
    top_eigenvalues: List[float]
    max_abs_eigenvalue: float
    mu_multiplicity: Optional[int] = None


def jacobi_eigh(
    matrix: np.ndarray,
    with_vectors: bool = False,
    off_tol: float = 1e-12,
    max_sweeps: int = 100,
):
    """Eigen-decomposition by cyclic Jacobi rotations.

    Returns (eigenvalues descending, vectors or None); the k-th column of
    the vector matrix belongs to the k-th eigenvalue.
    """
    a = np.array(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("expected a square matrix")
    n = a.shape[0]
    if n and np.max(np.abs(a - a.T)) > 1e-12 * max(1.0, np.max(np.abs(a))):
        raise ValueError("matrix is not symmetric")
    a = (a + a.T) / 2.0
    v = np.eye(n) if with_vectors else None
    converged = False
    for _ in range(max_sweeps):
        off = math.sqrt(2.0 * float(np.sum(np.triu(a, 1) ** 2)))
        if off < off_tol:
            converged = True
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(theta, 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                cp = a[:, p].copy()
                cq = a[:, q].copy()
                a[:, p] = c * cp - s * cq
                a[:, q] = s * cp + c * cq
                a[p, q] = a[q, p] = 0.0
                if v is not None:
                    vp = v[:, p].copy()
                    vq = v[:, q].copy()
                    v[:, p] = c * vp - s * vq
                    v[:, q] = s * vp + c * vq
    else:
        converged = False
    if not converged and n > 1:
        off = math.sqrt(2.0 * float(np.sum(np.triu(a, 1) ** 2)))
        if off >= off_tol:
            raise NoConvergence(f"off-diagonal norm {off:.3e} after {max_sweeps} sweeps")
    eigs = np.diag(a).copy()
    order = np.argsort(-eigs, kind="stable")
    eigs = eigs[order]
    if v is not None:
        v = v[:, order]
    return eigs, v


def eigen_top(matrix: np.ndarray, count: int = 4) -> SpectralSummary:
    """All eigenvalues (descending) with the top `count` pulled out."""
    eigs, _ = jacobi_eigh(matrix)
    top = [float(x) for x in eigs[: max(count, 4)]]
    return SpectralSummary(
        eigenvalues=eigs,
        top_eigenvalues=top,
        max_abs_eigenvalue=float(np.max(np.abs(eigs))) if len(eigs) else 0.0,
    )


def abs_row_sums(matrix: MatrixLike) -> np.ndarray:
    """Row sums of absolute values."""
    if isinstance(matrix, PairBoundMatrix):
        return matrix.row_sums()
    return np.sum(np.abs(np.asarray(matrix, dtype=float)), axis=1)


def _abs_matvec(matrix: MatrixLike, x: np.ndarray) -> np.ndarray:
    if isinstance(matrix, PairBoundMatrix):
        return matrix.matvec(x)
    # summed like abs_row_sums so the s = 0 bound matches it bit for bit
    return np.sum(np.abs(np.asarray(matrix, dtype=float)) * x[None, :], axis=1)


def row_sum_bound(row_sums: Sequence[float]) -> float:
    """Plain bound: every eigenvalue satisfies |lambda| <= max row sum."""
    arr = np.asarray(row_sums, dtype=float)
    if arr.size == 0:
        raise EmptyInput("no rows supplied")
    return float(np.max(arr))


def weighted_caps(matrix: MatrixLike, mu: float, s: int) -> np.ndarray:
    """The cap vector b^(s) of the weighted row-sum iteration."""
    if mu <= 0:
        raise NonpositiveMu(f"mu must be positive, got {mu}")
    if isinstance(matrix, PairBoundMatrix):
        n = matrix.n_pairs
    else:
        n = np.asarray(matrix).shape[0]
    b = np.ones(n)
    for _ in range(s):
        b = np.minimum(1.0, _abs_matvec(matrix, b) / mu)
    return b


def weighted_row_sum_bound(matrix: MatrixLike, mu: float, s: int) -> float:
    """max_i sum_j |a_ij| b_j^(s); if this is < mu, all eigenvalues are < mu."""
    b = weighted_caps(matrix, mu, s)
    sums = _abs_matvec(matrix, b)
    if sums.size == 0:
        raise EmptyInput("no rows supplied")
    return float(np.max(sums))


def mu_multiplicity(summary: SpectralSummary, mu: float, tol: float = 1e-6) -> int:
    """Number of eigenvalues within tol of mu."""
    count = int(np.sum(np.abs(summary.eigenvalues - mu) <= tol))
    summary.mu_multiplicity = count
    return count
