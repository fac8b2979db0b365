"""Shape operators, principal spectra, and tubes for submanifolds of S^n.

Two representations are supported and cross-checked by the test suite:

  * ConstraintManifold: the zero set of k smooth constraints intersected
    with the unit sphere. Points are reached by Newton projection, normal
    frames by Gram-Schmidt on the projected constraint gradients (in fixed
    constraint order, never pivoted, so the frame is a smooth field).

  * ParametrizedHypersurface: an explicit chart with a unit normal field.
    Shape operators come from central differences of the normal field along
    tangent directions, with steps sized to the declared evaluation noise.

The sign convention throughout: A_xi X = -(d xi~ (X))^tangential for a unit
normal field xi~ extending xi, so a geodesic sphere of radius t about p,
with normal pointing toward p, has spectrum {cot t}.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np

from . import _kern as kern
from .errors import (
    ArgumentError,
    AsymmetryError,
    ChartDomainError,
    ConvergenceError,
    FocalRadiusWarning,
    GCountError,
    RankDeficientError,
)
from .liegeo import ProjParam, cross_ratio
from .numkit import ClusteredSpectrum, cluster_values, jacobian_fd, orthonormalize

__all__ = [
    "ConstraintManifold",
    "CliffordStiefelManifold",
    "ParametrizedSubmanifold",
    "ParametrizedHypersurface",
    "PointBase",
    "ShapeResult",
    "tangent_normal_split",
    "random_normal",
    "shape_operator",
    "principal_spectrum",
    "hyp_shape_operator",
    "hyp_spectrum",
    "lie_curvature",
    "Tube",
    "tube",
    "focal_rank_drop",
]


# ---------------------------------------------------------------------------
# constraint manifolds


class ConstraintManifold:
    """{x in S^{n} : c(x) = 0} for k constraint functions with gradients.

    ``values_fn(x) -> (k,)`` and ``grads_fn(x) -> (k, n+1)``; the sphere
    constraint is handled internally and must not be included.
    """

    def __init__(self, ambient_dim, values_fn, grads_fn, seed_fn=None, name=""):
        self.ambient_dim = int(ambient_dim)
        self._values = values_fn
        self._grads = grads_fn
        self._seed = seed_fn
        self.name = name
        k = np.atleast_1d(values_fn(self._probe_point())).size
        self.n_constraints = int(k)

    def _probe_point(self):
        x = np.zeros(self.ambient_dim)
        x[0] = 1.0
        return x

    @property
    def dim(self) -> int:
        return self.ambient_dim - 1 - self.n_constraints

    @property
    def codim_sphere(self) -> int:
        return self.n_constraints

    def values(self, x) -> np.ndarray:
        return np.atleast_1d(np.asarray(self._values(np.asarray(x, dtype=float)), dtype=float))

    def grads(self, x) -> np.ndarray:
        return np.atleast_2d(np.asarray(self._grads(np.asarray(x, dtype=float)), dtype=float))

    def residual(self, x) -> float:
        x = np.asarray(x, dtype=float)
        r = abs(x @ x - 1.0) / 2.0
        v = self.values(x)
        if v.size:
            r = max(r, float(np.max(np.abs(v))))
        return r

    def project(self, x0, tol: float = 1e-12, maxiter: int = 50) -> np.ndarray:
        """Newton projection onto the manifold (minimal-norm updates).

        Iterates to 1e-13 when it can (the extra digit keeps fields built
        from projected points smooth at the scale of later differencing),
        but accepts at ``tol``.
        """
        x = np.asarray(x0, dtype=float).copy()
        target = min(tol, 1e-13)
        best = (x.copy(), np.inf)
        for _ in range(maxiter):
            f = np.concatenate([[(x @ x - 1.0) / 2.0], self.values(x)])
            resid = float(np.max(np.abs(f)))
            if resid < best[1]:
                best = (x.copy(), resid)
            if resid < target:
                return x
            jac = np.vstack([x[None, :], self.grads(x)])
            gram = jac @ jac.T
            try:
                lam = np.linalg.solve(gram, -f)
            except np.linalg.LinAlgError:
                break
            x = x + jac.T @ lam
        x, resid = best
        if resid > tol:
            raise ConvergenceError(
                f"projection stalled at residual {resid:.3e} (tol {tol:.1e})"
            )
        return x

    def check_sample(self, x, tol: float = 1e-10) -> None:
        """Constraint residuals below tol and gradients + position of full rank."""
        x = np.asarray(x, dtype=float)
        if self.residual(x) > tol:
            raise ConvergenceError(f"constraint residual {self.residual(x):.3e} above {tol:.1e}")
        span = np.vstack([x[None, :], self.grads(x)])
        sing = np.linalg.svd(span, compute_uv=False)
        if sing[-1] <= 1e-6:
            raise RankDeficientError(
                self.n_constraints,
                f"gradients + position nearly dependent (sigma_min {sing[-1]:.2e})",
            )

    def random_points(self, rng, count: int, tol: float = 1e-12) -> np.ndarray:
        """Sample by projecting seed candidates; rejects failed projections."""
        if isinstance(rng, (int, np.integer)):
            rng = np.random.default_rng(rng)
        out = np.empty((count, self.ambient_dim))
        got = 0
        tries = 0
        while got < count:
            tries += 1
            if tries > 50 * count + 50:
                raise ConvergenceError("sampling rejection rate too high")
            seed = self._seed(rng) if self._seed is not None else rng.normal(size=self.ambient_dim)
            seed = seed / np.linalg.norm(seed)
            try:
                cand = self.project(seed, tol=tol)
                self.check_sample(cand)
            except (ConvergenceError, RankDeficientError):
                continue
            out[got] = cand
            got += 1
        return out

    def normal_frame(self, x) -> np.ndarray:
        """Orthonormal frame of the normal space inside T_x S^n.

        Rows are the Gram-Schmidt images of the constraint gradients with
        the position component removed, in constraint order. This is the
        smooth frame the shape operator differentiates.
        """
        x = np.asarray(x, dtype=float)
        g = self.grads(x)
        g = g - (g @ x)[:, None] * x[None, :]
        return orthonormalize(g)

    def tangent_normal_split(self, x):
        """(T, N): orthonormal tangent rows and normal rows at x (all in T_x S^n)."""
        x = np.asarray(x, dtype=float)
        n_frame = self.normal_frame(x)
        span = np.vstack([x[None, :], n_frame])
        _, _, vh = np.linalg.svd(span, full_matrices=True)
        t_frame = vh[span.shape[0]:]
        return t_frame, n_frame


class CliffordStiefelManifold(ConstraintManifold):
    """The deformed Clifford-Stiefel constraint set V^{alpha,beta} in S^{2l-1}.

    Constraints, in fixed order: the weighted norm balance, -u.v, and the
    m - 1 pulled-back Clifford forms (E_i u . v) / (2 alpha beta). At
    alpha = beta = 1/sqrt(2) this is the Clifford-Stiefel manifold itself.
    """

    def __init__(self, system, alpha: float = None, beta: float = None):
        if alpha is None:
            alpha = 1.0 / np.sqrt(2.0)
        if beta is None:
            beta = float(np.sqrt(max(0.0, 1.0 - alpha * alpha)))
        if not (0.0 < alpha < 1.0) or abs(alpha * alpha + beta * beta - 1.0) > 1e-12:
            raise ArgumentError("need 0 < alpha < 1 with alpha^2 + beta^2 = 1")
        self.system = system
        self.alpha = float(alpha)
        self.beta = float(beta)
        self.l = system.l
        self.m = system.m
        e_arr = np.ascontiguousarray(system.as_array())
        self._e = e_arr
        super().__init__(
            2 * system.l,
            lambda x: kern.ptc_values(x, e_arr, self.alpha, self.beta),
            lambda x: kern.ptc_grads(x, e_arr, self.alpha, self.beta),
            seed_fn=self._structured_seed,
            name=f"V^({self.alpha:.3f},{self.beta:.3f})({system.m},{system.l})",
        )

    def _structured_seed(self, rng) -> np.ndarray:
        # exact up to roundoff: u of norm alpha, v of norm beta orthogonal to
        # u and all E_i u; the projection then only polishes
        l = self.l
        u = rng.normal(size=l)
        u /= np.linalg.norm(u)
        fam = np.vstack([u[None, :]] + [ (e @ u)[None, :] for e in self._e ])
        v = rng.normal(size=l)
        v = v - fam.T @ (fam @ v)
        nv = np.linalg.norm(v)
        if nv < 1e-8:
            v = rng.normal(size=l)
            v = v - fam.T @ (fam @ v)
            nv = np.linalg.norm(v)
        v /= nv
        return np.concatenate([self.alpha * u, self.beta * v])

    def project(self, x0, tol: float = 1e-12, maxiter: int = 50) -> np.ndarray:
        x, resid, _ = kern.ptc_project(
            np.asarray(x0, dtype=float), self._e, self.alpha, self.beta,
            tol=min(tol, 1e-13), maxiter=maxiter,
        )
        if resid > tol:
            raise ConvergenceError(
                f"projection stalled at residual {resid:.3e} (tol {tol:.1e})"
            )
        return x

    def xi_field(self, x) -> np.ndarray:
        """The distinguished unit normal (-beta/alpha u, alpha/beta v)."""
        x = np.asarray(x, dtype=float)
        l = self.l
        out = np.empty_like(x)
        out[:l] = -(self.beta / self.alpha) * x[:l]
        out[l:] = (self.alpha / self.beta) * x[l:]
        return out / np.linalg.norm(out)


# ---------------------------------------------------------------------------
# shape operators on constraint manifolds


def tangent_normal_split(manifold: ConstraintManifold, x):
    return manifold.tangent_normal_split(x)


def random_normal(manifold: ConstraintManifold, x, rng) -> np.ndarray:
    """A uniform random unit normal direction at x."""
    if isinstance(rng, (int, np.integer)):
        rng = np.random.default_rng(rng)
    frame = manifold.normal_frame(x)
    g = rng.normal(size=frame.shape[0])
    g /= np.linalg.norm(g)
    return frame.T @ g


@dataclass
class ShapeResult:
    """Clustered principal spectrum at a point-and-normal of a submanifold.

    ``infinite_mult`` counts the formally infinite principal curvature of
    the induced Legendre lift: the sphere codimension minus 1. ``eigvecs``
    holds eigenvector columns in tangent-frame coordinates, ascending by
    eigenvalue; ambient principal directions are ``frame.T @ eigvecs``.
    """

    spectrum: ClusteredSpectrum
    infinite_mult: int
    asymmetry: float
    frame: np.ndarray = field(repr=False)
    matrix: np.ndarray = field(repr=False)
    eigvecs: np.ndarray = field(repr=False)

    @property
    def g_total(self) -> int:
        return self.spectrum.g + (1 if self.infinite_mult > 0 else 0)

    def principal_directions(self, cluster: int) -> np.ndarray:
        """Ambient orthonormal directions spanning one curvature cluster."""
        w = self.spectrum.raw
        starts = np.concatenate([[0], np.cumsum(self.spectrum.multiplicities)])
        sel = slice(starts[cluster], starts[cluster + 1])
        return (self.frame.T @ self.eigvecs[:, sel]).T

    def multiplicity_pattern(self):
        return tuple(int(v) for v in self.spectrum.multiplicities) + (
            (self.infinite_mult,) if self.infinite_mult else ()
        )


def shape_operator(manifold: ConstraintManifold, x, xi, step: float = 1e-5,
                   max_asymmetry: float = 1e-5):
    """Shape operator matrix at x for unit normal xi, in a tangent frame.

    The normal field differentiated is the combination of the manifold's
    Gram-Schmidt normal frame with coefficients frozen at x, evaluated at
    Newton projections of x +- step * t_a. Returns (A, T, asymmetry) with
    A symmetrized.
    """
    x = np.asarray(x, dtype=float)
    xi = np.asarray(xi, dtype=float)
    t_frame, n_frame = manifold.tangent_normal_split(x)
    coeff = n_frame @ xi
    if abs(np.linalg.norm(xi) - 1.0) > 1e-8 or np.linalg.norm(xi - n_frame.T @ coeff) > 1e-8:
        raise ArgumentError("xi must be a unit vector in the normal space at x")
    d = t_frame.shape[0]
    dxi = np.empty((d, x.size))
    for a in range(d):
        yp = manifold.project(x + step * t_frame[a])
        ym = manifold.project(x - step * t_frame[a])
        xp = coeff @ manifold.normal_frame(yp)
        xm = coeff @ manifold.normal_frame(ym)
        dxi[a] = (xp - xm) / (2.0 * step)
    a_mat = -(dxi @ t_frame.T)
    asym = float(np.max(np.abs(a_mat - a_mat.T))) if d else 0.0
    if asym > max_asymmetry:
        raise AsymmetryError(
            f"shape operator asymmetry {asym:.3e} exceeds {max_asymmetry:.1e}"
        )
    return (a_mat + a_mat.T) / 2.0, t_frame, asym


def _spectral_result(a_mat, t_frame, asym, infinite_mult, tol):
    w, v = np.linalg.eigh(a_mat)
    spec = cluster_values(w, tol)
    return ShapeResult(
        spectrum=spec,
        infinite_mult=int(infinite_mult),
        asymmetry=asym,
        frame=t_frame,
        matrix=a_mat,
        eigvecs=v,
    )


def principal_spectrum(manifold: ConstraintManifold, x, xi, tol: float = 1e-4,
                       step: float = 1e-5) -> ShapeResult:
    a_mat, t_frame, asym = shape_operator(manifold, x, xi, step=step)
    return _spectral_result(a_mat, t_frame, asym, manifold.codim_sphere - 1, tol)


def lie_curvature(result: ShapeResult) -> float:
    """Cross ratio of the four curvatures in ascending order, infinity last."""
    if result.g_total != 4:
        raise GCountError(result.g_total, f"need exactly 4 distinct curvatures, got {result.g_total}")
    vals = [ProjParam.from_curvature(v) for v in result.spectrum.values]
    if result.infinite_mult > 0:
        vals.append(ProjParam.infinite())
    return cross_ratio(*vals)


# ---------------------------------------------------------------------------
# parametrized hypersurfaces


@dataclass
class ParametrizedHypersurface:
    """A chart F: R^{n-1} -> S^n with a unit normal field.

    ``jac_fn`` (ambient x nparams), when given, avoids nested differencing.
    ``normal_noise`` is the rough (non-smooth) error level of ``normal_fn``;
    the differencing step for the shape operator is sized from it by the
    cube-root rule.
    """

    point_fn: callable
    normal_fn: callable
    nparams: int
    ambient_dim: int
    jac_fn: callable = None
    normal_noise: float = 1e-14
    name: str = ""

    def jacobian(self, params) -> np.ndarray:
        if self.jac_fn is not None:
            return np.asarray(self.jac_fn(np.asarray(params, dtype=float)), dtype=float)
        return jacobian_fd(self.point_fn, np.asarray(params, dtype=float))


@dataclass
class ParametrizedSubmanifold:
    """An explicit chart of a codimension >= 2 submanifold of the sphere."""

    point_fn: callable
    nparams: int
    ambient_dim: int
    jac_fn: callable = None
    sample_fn: callable = None

    def jacobian(self, params) -> np.ndarray:
        if self.jac_fn is not None:
            return np.asarray(self.jac_fn(np.asarray(params, dtype=float)), dtype=float)
        return jacobian_fd(self.point_fn, np.asarray(params, dtype=float))


@dataclass
class PointBase:
    """A single point of S^n, the degenerate tube base (geodesic spheres)."""

    point: np.ndarray

    def __post_init__(self):
        self.point = np.asarray(self.point, dtype=float)
        if abs(self.point @ self.point - 1.0) > 1e-10:
            raise ArgumentError("base point must lie on the unit sphere")


def hyp_shape_operator(hyp: ParametrizedHypersurface, params, step: float = None,
                       max_asymmetry: float = 1e-5):
    """Shape operator of a parametrized hypersurface at chart parameters.

    Tangent frame from the chart differential; normal derivatives by
    central differences of the normal field along preimage directions.
    """
    params = np.asarray(params, dtype=float)
    x = np.asarray(hyp.point_fn(params), dtype=float)
    jac = hyp.jacobian(params)
    sing = np.linalg.svd(jac, compute_uv=False)
    if sing[-1] < 1e-8 * max(1.0, sing[0]):
        raise ChartDomainError("degenerate chart differential at this sample")
    # tangent frame from the chart, cleaned against the position direction
    cols = jac.T - (jac.T @ x)[:, None] * x[None, :]
    t_frame = orthonormalize(cols)
    nu = np.asarray(hyp.normal_fn(params), dtype=float)
    checks = [abs(nu @ nu - 1.0), abs(nu @ x)] + [abs(nu @ t) for t in t_frame]
    if max(checks) > 1e-6:
        raise ArgumentError(
            f"normal field is not unit-orthogonal at this sample (err {max(checks):.2e})"
        )
    if step is None:
        step = max(1e-5, float(3.0 * hyp.normal_noise) ** (1.0 / 3.0))
    d = t_frame.shape[0]
    dirs = np.linalg.lstsq(jac, t_frame.T, rcond=None)[0]  # (nparams, d)
    dnu = np.empty((d, x.size))
    for a in range(d):
        npl = np.asarray(hyp.normal_fn(params + step * dirs[:, a]), dtype=float)
        nmi = np.asarray(hyp.normal_fn(params - step * dirs[:, a]), dtype=float)
        dnu[a] = (npl - nmi) / (2.0 * step)
    a_mat = -(dnu @ t_frame.T)
    asym = float(np.max(np.abs(a_mat - a_mat.T)))
    if asym > max_asymmetry:
        raise AsymmetryError(
            f"shape operator asymmetry {asym:.3e} exceeds {max_asymmetry:.1e}"
        )
    return (a_mat + a_mat.T) / 2.0, t_frame, asym


def hyp_spectrum(hyp: ParametrizedHypersurface, params, tol: float = 1e-4,
                 step: float = None) -> ShapeResult:
    a_mat, t_frame, asym = hyp_shape_operator(hyp, params, step=step)
    return _spectral_result(a_mat, t_frame, asym, 0, tol)


# ---------------------------------------------------------------------------
# tubes


def _fixed_seed_indices(x0, jac0, count, ambient_dim):
    # coordinate axes with the largest residual after removing position+tangent
    span = [x0]
    if jac0 is not None and jac0.size:
        span.extend(orthonormalize(jac0.T))
    span = orthonormalize(np.vstack(span) if isinstance(span, list) else span)
    eye = np.eye(ambient_dim)
    resid = eye - (eye @ span.T) @ span
    norms = np.linalg.norm(resid, axis=1)
    order = np.argsort(-norms, kind="stable")
    return np.sort(order[:count])


class Tube:
    """The tube of geodesic radius t over a base submanifold of S^n.

    Charts are centered at a base point and a unit normal there; each chart
    is a ParametrizedHypersurface in d + (k-1) parameters (d = base dim,
    k = base sphere-codimension). The chart normal field
    -sin t x(s) + cos t xi(s, tau) is closed form given the base frames.
    """

    def __init__(self, base, t: float, focal_tol: float = 1e-3, rng=None):
        self.base = base
        self.t = float(t)
        if not (0.0 < self.t < np.pi):
            raise ArgumentError("tube radius must lie in (0, pi)")
        if isinstance(base, PointBase):
            self.ambient_dim = base.point.size
            self.base_dim = 0
            self.codim = self.ambient_dim - 1
        elif isinstance(base, ParametrizedSubmanifold):
            self.ambient_dim = base.ambient_dim
            self.base_dim = base.nparams
            self.codim = self.ambient_dim - 1 - self.base_dim
        elif isinstance(base, ConstraintManifold):
            self.ambient_dim = base.ambient_dim
            self.base_dim = base.dim
            self.codim = base.codim_sphere
        else:
            raise ArgumentError(f"unsupported tube base {type(base).__name__}")
        if self.codim < 1:
            raise ArgumentError("tube base must have positive codimension")
        self.nparams = self.base_dim + self.codim - 1
        self._warn_if_focal(rng or np.random.default_rng(0), focal_tol)

    def _warn_if_focal(self, rng, focal_tol):
        angles = [0.0]
        try:
            if isinstance(self.base, ConstraintManifold):
                x = self.base.random_points(rng, 1)[0]
                nu = random_normal(self.base, x, rng)
                res = principal_spectrum(self.base, x, nu)
                angles += [float(np.arctan2(1.0, v)) for v in res.spectrum.values]
        except Exception:
            return
        for th in angles:
            d = abs(self.t - th) % np.pi
            if min(d, np.pi - d) < focal_tol:
                warnings.warn(
                    f"tube radius {self.t:.6f} is within {focal_tol:g} of a focal "
                    f"radius of the base (angle {th:.6f})",
                    FocalRadiusWarning,
                    stacklevel=3,
                )

    # -- base plumbing ------------------------------------------------------

    def _center(self, rng):
        """(base description, x0, normal frame at x0) for a random center."""
        if isinstance(self.base, PointBase):
            return None, self.base.point, None
        if isinstance(self.base, ConstraintManifold):
            x0 = self.base.random_points(rng, 1)[0]
            return None, x0, None
        params = self.base.sample_fn(rng) if self.base.sample_fn else rng.normal(size=self.base.nparams)
        return np.asarray(params, dtype=float), np.asarray(self.base.point_fn(params), dtype=float), None

    def chart(self, center, xi0) -> ParametrizedHypersurface:
        """Chart centered at a base point (or chart params) and unit normal xi0.

        ``center`` is a base chart parameter vector for parametrized bases,
        an ambient point for constraint-manifold bases, and ignored for
        point bases.
        """
        t = self.t
        cos_t, sin_t = np.cos(t), np.sin(t)
        if isinstance(self.base, PointBase):
            p = self.base.point
            frame0 = _complement_frame(p[None, :], self.ambient_dim)

            def base_point(s):
                return p

            def normal_frame(s):
                return frame0

            x0 = p
        elif isinstance(self.base, ConstraintManifold):
            man = self.base
            x0 = np.asarray(center, dtype=float)
            t_frame0, _ = man.tangent_normal_split(x0)

            def base_point(s):
                return man.project(x0 + s @ t_frame0)

            def normal_frame(s):
                return man.normal_frame(base_point(s))

        else:
            sub = self.base
            p0 = np.asarray(center, dtype=float)
            jac0 = sub.jacobian(p0)
            x0 = np.asarray(sub.point_fn(p0), dtype=float)
            seeds = _fixed_seed_indices(x0, jac0, self.codim, self.ambient_dim)
            eye = np.eye(self.ambient_dim)

            def base_point(s):
                return np.asarray(sub.point_fn(p0 + s), dtype=float)

            def normal_frame(s):
                pt = base_point(s)
                jac = sub.jacobian(p0 + s)
                rows = np.vstack([pt[None, :], jac.T, eye[seeds]])
                return orthonormalize(rows)[1 + sub.nparams:]

        xi0 = np.asarray(xi0, dtype=float)
        n0 = normal_frame(np.zeros(self.base_dim)) if self.base_dim else normal_frame(np.zeros(0))
        alpha0 = n0 @ xi0
        if abs(np.linalg.norm(xi0) - 1.0) > 1e-8 or np.linalg.norm(xi0 - n0.T @ alpha0) > 1e-8:
            raise ArgumentError("xi0 must be a unit normal at the chart center")
        bperp = _complement_frame(alpha0[None, :], self.codim)

        db = self.base_dim

        def split(q):
            q = np.asarray(q, dtype=float)
            return q[:db], q[db:]

        def point_fn(q):
            s, tau = split(q)
            bx = base_point(s)
            w = alpha0 + tau @ bperp
            xi = (w @ normal_frame(s)) / np.linalg.norm(w)
            return cos_t * bx + sin_t * xi

        def normal_fn(q):
            s, tau = split(q)
            bx = base_point(s)
            w = alpha0 + tau @ bperp
            xi = (w @ normal_frame(s)) / np.linalg.norm(w)
            return -sin_t * bx + cos_t * xi

        return ParametrizedHypersurface(
            point_fn=point_fn,
            normal_fn=normal_fn,
            nparams=self.nparams,
            ambient_dim=self.ambient_dim,
            jac_fn=None,
            normal_noise=1e-14,
            name=f"tube(t={t:.6f})",
        )

    def sample_charts(self, rng, count: int):
        """Random centered charts; evaluate each at params = 0."""
        if isinstance(rng, (int, np.integer)):
            rng = np.random.default_rng(rng)
        charts = []
        for _ in range(count):
            center, x0, _ = self._center(rng)
            if isinstance(self.base, PointBase):
                frame = _complement_frame(x0[None, :], self.ambient_dim)
            elif isinstance(self.base, ConstraintManifold):
                frame = self.base.normal_frame(x0)
            else:
                jac0 = self.base.jacobian(center)
                seeds = _fixed_seed_indices(x0, jac0, self.codim, self.ambient_dim)
                rows = np.vstack([x0[None, :], jac0.T, np.eye(self.ambient_dim)[seeds]])
                frame = orthonormalize(rows)[1 + self.base_dim:]
            g = rng.normal(size=frame.shape[0])
            xi0 = frame.T @ (g / np.linalg.norm(g))
            charts.append(self.chart(x0 if isinstance(self.base, ConstraintManifold) else center, xi0))
        return charts


def _complement_frame(rows, ambient_dim):
    rows = np.atleast_2d(np.asarray(rows, dtype=float))
    _, _, vh = np.linalg.svd(rows, full_matrices=True)
    return vh[rows.shape[0]:]


def _parallel_hypersurface(hyp: ParametrizedHypersurface, t: float) -> ParametrizedHypersurface:
    cos_t, sin_t = np.cos(t), np.sin(t)

    def point_fn(q):
        return cos_t * np.asarray(hyp.point_fn(q)) + sin_t * np.asarray(hyp.normal_fn(q))

    def normal_fn(q):
        return -sin_t * np.asarray(hyp.point_fn(q)) + cos_t * np.asarray(hyp.normal_fn(q))

    return ParametrizedHypersurface(
        point_fn=point_fn,
        normal_fn=normal_fn,
        nparams=hyp.nparams,
        ambient_dim=hyp.ambient_dim,
        jac_fn=None,
        normal_noise=hyp.normal_noise,
        name=f"parallel(t={t:.6f}) of {hyp.name}" if hyp.name else f"parallel(t={t:.6f})",
    )


def tube(base, t: float, rng=None):
    """Tube of radius t over a point, a parametrized submanifold, or a
    constraint manifold; for a hypersurface base, the parallel hypersurface
    at oriented distance t (curvature angles shift by -t). Warns when t is
    within 1e-3 of a detected focal radius of a constraint-manifold base."""
    if isinstance(base, ParametrizedHypersurface):
        return _parallel_hypersurface(base, t)
    return Tube(base, t, rng=rng)


def focal_rank_drop(tb: Tube, chart: ParametrizedHypersurface, sing_tol: float = 1e-4) -> int:
    """Rank deficiency of a tube chart differential at its center.

    At t = arccot(kappa) for a base principal curvature kappa, the focal map
    x + t-geodesic collapses the kappa-eigenspace, so the drop equals the
    multiplicity of cot(t) in the base spectrum along the chart's normal.
    """
    jac = chart.jacobian(np.zeros(chart.nparams))
    sing = np.linalg.svd(jac, compute_uv=False)
    return int(np.sum(sing < sing_tol * max(1.0, sing[0])))
