"""Shared numerical primitives: clustered eigensolves, Gram-Schmidt frames,
finite-difference Jacobians.

Everything downstream (shape operators, tube charts, certification loops)
funnels through these few routines, so their conventions are fixed here once:
eigenvalues ascend, clustering is single-linkage with an absolute gap
tolerance, orthonormalization is modified Gram-Schmidt in input order with no
pivoting (a pivot would make the output frame discontinuous in the inputs,
and the shape operators differentiate these frames).
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np

from .errors import ClusterAmbiguityWarning, NonFiniteError, RankDeficientError

__all__ = [
    "ClusteredSpectrum",
    "sym_eig_clustered",
    "cluster_values",
    "orthonormalize",
    "jacobian_fd",
]


@dataclass(frozen=True)
class ClusteredSpectrum:
    """Distinct eigenvalues of a symmetric matrix with multiplicities.

    ``values[i]`` is the mean of cluster i (ascending), ``multiplicities[i]``
    its size. ``ambiguous`` is set when some consecutive gap falls in the
    band [tol/2, 2 tol], where the clustering could flip under a small
    perturbation of the tolerance.
    """

    values: np.ndarray
    multiplicities: np.ndarray
    tol: float
    ambiguous: bool
    raw: np.ndarray = field(repr=False, default=None)

    @property
    def g(self) -> int:
        return len(self.values)

    def pairs(self):
        return list(zip(self.values.tolist(), self.multiplicities.tolist()))

    def __iter__(self):
        return iter(self.pairs())


def _cluster_sorted(w: np.ndarray, tol: float):
    # single linkage: a gap >= tol starts a new cluster
    breaks = np.flatnonzero(np.diff(w) >= tol)
    starts = np.concatenate([[0], breaks + 1])
    ends = np.concatenate([breaks + 1, [len(w)]])
    gaps = np.diff(w)
    ambiguous = bool(np.any((gaps >= tol / 2) & (gaps <= 2 * tol)))
    return starts, ends, ambiguous


def cluster_values(values, tol: float = 1e-4, warn: bool = True) -> ClusteredSpectrum:
    """Cluster a 1-d array of real values by single linkage with gap ``tol``."""
    w = np.sort(np.asarray(values, dtype=float))
    if w.size == 0:
        return ClusteredSpectrum(w, np.zeros(0, dtype=int), tol, False, w)
    if not np.all(np.isfinite(w)):
        raise NonFiniteError("cannot cluster non-finite values")
    starts, ends, ambiguous = _cluster_sorted(w, tol)
    means = np.array([w[a:b].mean() for a, b in zip(starts, ends)])
    mults = (ends - starts).astype(int)
    if ambiguous and warn:
        warnings.warn(
            "eigenvalue gap within a factor 2 of the clustering tolerance",
            ClusterAmbiguityWarning,
            stacklevel=2,
        )
    return ClusteredSpectrum(means, mults, tol, ambiguous, w)


def sym_eig_clustered(mat, tol: float = 1e-4, return_vectors: bool = False):
    """Eigen-decompose a symmetric matrix and cluster near-equal eigenvalues.

    The matrix is symmetrized first; callers that care about how asymmetric
    their input was should measure that themselves beforehand.
    """
    a = np.asarray(mat, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise NonFiniteError("matrix has non-finite entries")
    sym = (a + a.T) / 2
    if return_vectors:
        w, v = np.linalg.eigh(sym)
        return cluster_values(w, tol), v
    w = np.linalg.eigvalsh(sym)
    return cluster_values(w, tol)


def orthonormalize(vectors, tol: float = 1e-10) -> np.ndarray:
    """Modified Gram-Schmidt in input order, no pivoting.

    Returns an array of orthonormal rows spanning the same flag as the
    inputs. Raises RankDeficientError (carrying the input index) when a
    vector's residual norm drops below ``tol`` times its original norm.
    The no-pivot rule matters: downstream code differentiates these frames
    through their inputs, so the coefficient recipe must be continuous.
    """
    v = np.array(vectors, dtype=float)
    if v.ndim != 2:
        raise ValueError("expected a 2-d array of row vectors")
    if not np.all(np.isfinite(v)):
        raise NonFiniteError("input vectors have non-finite entries")
    out = np.empty_like(v)
    for i in range(v.shape[0]):
        w = v[i]
        scale = np.linalg.norm(w)
        for j in range(i):
            w = w - (out[j] @ w) * out[j]
        # second pass for orthogonality at working precision
        for j in range(i):
            w = w - (out[j] @ w) * out[j]
        nw = np.linalg.norm(w)
        if scale == 0.0 or nw <= tol * scale:
            raise RankDeficientError(i)
        out[i] = w / nw
    return out


def jacobian_fd(fn, x, step: float = 1e-5) -> np.ndarray:
    """Central-difference Jacobian of ``fn`` at ``x``.

    ``fn`` maps a length-p vector to a length-q vector; the result has shape
    (q, p). Central differences with the default step keep truncation and
    roundoff balanced near 1e-10 for evaluation chains computed to machine
    precision.
    """
    x = np.asarray(x, dtype=float)
    if x.ndim != 1:
        raise ValueError("expected a 1-d point")
    cols = []
    for i in range(x.size):
        e = np.zeros_like(x)
        e[i] = step
        cols.append((np.asarray(fn(x + e), dtype=float) - np.asarray(fn(x - e), dtype=float)) / (2 * step))
    jac = np.stack(cols, axis=-1)
    if not np.all(np.isfinite(jac)):
        raise NonFiniteError("non-finite entries in finite-difference Jacobian")
    return jac
