"""The stretched Clifford-Stiefel manifolds V2^{alpha,beta} and their
non-constant Lie curvature.

T_{alpha,beta}(u, v) = sqrt(2) (alpha u, beta v) carries V2(C_{m-1}) to a
proper Dupin submanifold that is not Lie equivalent to an isoparametric
one: the Lie curvature takes the value alpha^2 at the normal xi and
beta^2 at -xi, so it is not constant on the unit normal bundle.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .clifford import CliffordSystem
from .engine import (
    CliffordStiefelManifold,
    ShapeResult,
    lie_curvature,
    principal_spectrum,
    random_normal,
)
from .errors import ArgumentError, GCountError
from .otfkm import FramePoint, check_admissible

__all__ = [
    "PTParams",
    "deform",
    "pt_manifold",
    "spectrum_at_xi",
    "psi_at",
    "psi_scan",
    "PsiScan",
    "special_tangents",
]

_ISO = 1.0 / np.sqrt(2.0)


@dataclass(frozen=True)
class PTParams:
    """Stretching weights with alpha^2 + beta^2 = 1.

    The interesting regime keeps both weights at least 1e-3 away from the
    isoparametric value 1/sqrt(2); pass allow_isoparametric=True only for
    diagnostic contrast runs.
    """

    alpha: float
    beta: float
    allow_isoparametric: bool = False

    def __post_init__(self):
        if not (self.alpha > 0.0 and self.beta > 0.0):
            raise ArgumentError("alpha and beta must be positive")
        if abs(self.alpha**2 + self.beta**2 - 1.0) > 1e-12:
            raise ArgumentError("need alpha^2 + beta^2 = 1 within 1e-12")
        if not self.allow_isoparametric and (
            abs(self.alpha - _ISO) < 1e-3 or abs(self.beta - _ISO) < 1e-3
        ):
            raise ArgumentError(
                "alpha = beta = 1/sqrt(2) is the isoparametric case; keep both "
                "weights at least 1e-3 away or set allow_isoparametric"
            )

    @classmethod
    def from_alpha2(cls, alpha2: float, allow_isoparametric: bool = False) -> "PTParams":
        if not (0.0 < alpha2 < 1.0):
            raise ArgumentError("alpha^2 must lie in (0, 1)")
        return cls(float(np.sqrt(alpha2)), float(np.sqrt(1.0 - alpha2)),
                   allow_isoparametric)


def deform(params: PTParams, fp: FramePoint) -> np.ndarray:
    """sqrt(2) (alpha u, beta v): a unit vector on the stretched manifold."""
    if fp.residual() > 1e-9:
        raise ArgumentError(f"frame point residual {fp.residual():.3e} too large")
    out = np.concatenate([
        np.sqrt(2.0) * params.alpha * fp.u,
        np.sqrt(2.0) * params.beta * fp.v,
    ])
    assert abs(out @ out - 1.0) < 1e-12
    return out


def pt_manifold(params: PTParams, system: CliffordSystem) -> CliffordStiefelManifold:
    """V2^{alpha,beta} as a constraint manifold of codimension m+1 in S^{2l-1}.

    Constraints are the weighted norm balance f, the orthogonality g, and
    the Clifford forms pulled back through the inverse stretch.
    """
    check_admissible(system)
    return CliffordStiefelManifold(system, alpha=params.alpha, beta=params.beta)


def spectrum_at_xi(params: PTParams, system: CliffordSystem, fp: FramePoint,
                   tol: float = 1e-4) -> ShapeResult:
    """Principal spectrum at the distinguished normal xi = (-b/a u, a/b v).

    Finite values sit at {-alpha/beta, 0, beta/alpha}; the formally
    infinite curvature has multiplicity m.
    """
    man = pt_manifold(params, system)
    x = man.project(deform(params, fp))
    return principal_spectrum(man, x, man.xi_field(x), tol=tol)


def psi_at(params: PTParams, system: CliffordSystem, fp: FramePoint, nu=None) -> float:
    """Lie curvature at a sampled normal (default: the distinguished xi)."""
    man = pt_manifold(params, system)
    x = man.project(deform(params, fp))
    if nu is None:
        nu = man.xi_field(x)
    return lie_curvature(principal_spectrum(man, x, nu))


@dataclass
class PsiScan:
    """Lie curvature statistics over sampled (point, normal) pairs."""

    alpha2: float
    values: np.ndarray
    skipped: int
    hist_counts: np.ndarray = field(repr=False)
    hist_edges: np.ndarray = field(repr=False)

    @property
    def min_psi(self) -> float:
        return float(np.min(self.values))

    @property
    def max_psi(self) -> float:
        return float(np.max(self.values))

    @property
    def spread(self) -> float:
        return self.max_psi - self.min_psi

    @property
    def non_constant(self) -> bool:
        beta2 = 1.0 - self.alpha2
        return self.spread > abs(beta2 - self.alpha2) / 2.0


def psi_scan(params: PTParams, system: CliffordSystem, samples: int = 10,
             normals_per_sample: int = 10, seed=0) -> PsiScan:
    """Scan Psi over random unit normals at sampled points.

    The normals +-xi are always included at each point, so the scan is
    guaranteed to see alpha^2 and beta^2. Normals whose spectra do not
    split into 4 distinct curvatures are skipped and counted.
    """
    if abs(params.alpha**2 - 0.5) < 1e-12:
        raise ArgumentError("psi_scan needs alpha^2 != 1/2")
    man = pt_manifold(params, system)
    rng = np.random.default_rng(seed)
    pts = man.random_points(rng, samples)
    values = []
    skipped = 0
    for x in pts:
        xi = man.xi_field(x)
        normals = [xi, -xi]
        normals += [random_normal(man, x, rng) for _ in range(max(0, normals_per_sample - 2))]
        for nu in normals:
            try:
                res = principal_spectrum(man, x, nu)
                values.append(lie_curvature(res))
            except GCountError:
                skipped += 1
    values = np.array(values)
    counts, edges = np.histogram(values, bins=20, range=(0.0, 1.0))
    return PsiScan(alpha2=params.alpha**2, values=values, skipped=skipped,
                   hist_counts=counts, hist_edges=edges)


def special_tangents(params: PTParams, system: CliffordSystem, fp: FramePoint, rng):
    """Unit tangents (X, Y, Z) at the stretched image of fp with known
    principal curvatures (beta/alpha, -alpha/beta, 0) at the normal xi.

    X = (x, 0) with x orthogonal to u, v, and every E_i v; Y = (0, y) with
    y orthogonal to v, u, and every E_i u; Z is the initial velocity of the
    rotation mixing the two halves. Components are in the stretched
    coordinates, where |u| = alpha and |v| = beta.
    """
    if isinstance(rng, (int, np.integer)):
        rng = np.random.default_rng(rng)
    man = pt_manifold(params, system)
    p = man.project(deform(params, fp))
    l = system.l
    u, v = p[:l], p[l:]
    e_mats = system.as_array()

    def complement(base_rows):
        basis = np.vstack(base_rows)
        q = np.linalg.qr(basis.T, mode="reduced")[0]
        g = rng.normal(size=l)
        g = g - q @ (q.T @ g)
        return g / np.linalg.norm(g)

    x_dir = complement([u[None, :], v[None, :]] + [(e @ v)[None, :] for e in e_mats])
    y_dir = complement([u[None, :], v[None, :]] + [(e @ u)[None, :] for e in e_mats])
    zeros = np.zeros(l)
    x_vec = np.concatenate([params.alpha * x_dir, zeros])
    y_vec = np.concatenate([zeros, params.beta * y_dir])
    z_vec = np.concatenate([(params.alpha / params.beta) * v,
                            -(params.beta / params.alpha) * u])
    out = []
    for w in (x_vec, y_vec, z_vec):
        out.append(w / np.linalg.norm(w))
    return tuple(out)
