"""Dupin hypersurfaces of S^4, conformal warping, and quaternionic Hopf lifts.

The pipeline: start from an isoparametric hypersurface of S^4 (a product
cyclide S^1(r) x S^2(s), or a tube over the Veronese surface), warp it by a
conformal dilation to break curvature constancy, and pull it back through
the Hopf fibration h(u, v) = (2 u conj(v), |u|^2 - |v|^2) to a hypersurface
of S^7. Each base principal curvature cot(theta) doubles into
cot(theta/2) and cot((theta + pi)/2) upstairs, and the Lie curvature of
the pairing is 2 / (1 + cos(theta - alpha)) for base angles theta, alpha.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import _kern as kern
from .engine import (
    ParametrizedHypersurface,
    ParametrizedSubmanifold,
    Tube,
    hyp_spectrum,
)
from .errors import ArgumentError, ChartDomainError, DegenerateCrossRatioError
from .liegeo import ProjParam, cross_ratio
from .quat import Quaternion

__all__ = [
    "S4Hypersurface",
    "LiftPoint",
    "hopf",
    "fiber_param",
    "cyclide",
    "veronese_point",
    "veronese_submanifold",
    "cartan_tube",
    "mobius_warp",
    "lift",
    "lift_normal_complement",
    "lifted_spectrum_check",
    "DoublingReport",
    "psi_mo",
    "pairing_cross_ratio",
    "lift_psi_scan",
    "PsiMoScan",
]

DEFAULT_POLE = np.array([1.0, 0.0, 0.0, 0.0, 0.0])


# ---------------------------------------------------------------------------
# surfaces in S^4


@dataclass
class S4Hypersurface:
    """A chart of a hypersurface of S^4 with unit normal and declared g.

    ``meta`` carries the implicit description (kind, level, warp) used by
    the critical-point machinery; ``sample_fn(rng)`` draws chart parameters
    well inside the chart domain.
    """

    point_fn: callable
    normal_fn: callable
    g: int
    sample_fn: callable
    jac_fn: callable = None
    normal_noise: float = 1e-14
    name: str = ""
    meta: dict = field(default_factory=dict)

    nparams: int = 3
    ambient_dim: int = 5

    def as_hyp(self) -> ParametrizedHypersurface:
        return ParametrizedHypersurface(
            point_fn=self.point_fn,
            normal_fn=self.normal_fn,
            nparams=self.nparams,
            ambient_dim=self.ambient_dim,
            jac_fn=self.jac_fn,
            normal_noise=self.normal_noise,
            name=self.name,
        )

    def point(self, q) -> np.ndarray:
        return np.asarray(self.point_fn(np.asarray(q, dtype=float)), dtype=float)

    def normal(self, q) -> np.ndarray:
        return np.asarray(self.normal_fn(np.asarray(q, dtype=float)), dtype=float)


def _sphere2(phi, psi):
    sp, cp = np.sin(phi), np.cos(phi)
    return np.array([sp * np.cos(psi), sp * np.sin(psi), cp])


def cyclide(r: float) -> S4Hypersurface:
    """The product S^1(r) x S^2(s) in S^4, r^2 + s^2 = 1, parametrized by
    (theta, phi, psi). Principal curvatures -s/r (once) and r/s (twice)
    for the normal (s cos theta, s sin theta, -r n)."""
    if not (0.0 < r < 1.0):
        raise ArgumentError("cyclide needs 0 < r < 1")
    s = float(np.sqrt(1.0 - r * r))

    def point_fn(q):
        th, phi, psi = q
        return np.concatenate([[r * np.cos(th), r * np.sin(th)], s * _sphere2(phi, psi)])

    def normal_fn(q):
        th, phi, psi = q
        return np.concatenate([[s * np.cos(th), s * np.sin(th)], -r * _sphere2(phi, psi)])

    def jac_fn(q):
        th, phi, psi = q
        sp, cp = np.sin(phi), np.cos(phi)
        spsi, cpsi = np.sin(psi), np.cos(psi)
        jac = np.zeros((5, 3))
        jac[0, 0] = -r * np.sin(th)
        jac[1, 0] = r * np.cos(th)
        jac[2:, 1] = s * np.array([cp * cpsi, cp * spsi, -sp])
        jac[2:, 2] = s * np.array([-sp * spsi, sp * cpsi, 0.0])
        return jac

    def sample_fn(rng):
        # keep phi away from the S^2 chart poles
        return np.array([
            rng.uniform(0.0, 2.0 * np.pi),
            rng.uniform(0.5, np.pi - 0.5),
            rng.uniform(0.0, 2.0 * np.pi),
        ])

    return S4Hypersurface(
        point_fn=point_fn, normal_fn=normal_fn, g=2, sample_fn=sample_fn,
        jac_fn=jac_fn, normal_noise=1e-15, name=f"cyclide(r={r:g})",
        meta={"kind": "cyclide", "level": r, "warp_c": 1.0, "pole": DEFAULT_POLE},
    )


def veronese_point(p) -> np.ndarray:
    """The quadratic sphere-to-sphere embedding identifying antipodes."""
    x, y, z = p
    return np.array([
        np.sqrt(3.0) * x * y,
        np.sqrt(3.0) * x * z,
        np.sqrt(3.0) * y * z,
        np.sqrt(3.0) * (x * x - y * y) / 2.0,
        (x * x + y * y - 2.0 * z * z) / 2.0,
    ])


def _veronese_jac_at(p):
    x, y, z = p
    r3 = np.sqrt(3.0)
    return np.array([
        [r3 * y, r3 * x, 0.0],
        [r3 * z, 0.0, r3 * x],
        [0.0, r3 * z, r3 * y],
        [r3 * x, -r3 * y, 0.0],
        [x, y, -2.0 * z],
    ])


def _verify_veronese(rng):
    p = rng.normal(size=(32, 3))
    p /= np.linalg.norm(p, axis=1, keepdims=True)
    img = np.array([veronese_point(q) for q in p])
    if np.max(np.abs(np.einsum("ij,ij->i", img, img) - 1.0)) > 1e-12:
        raise AssertionError("quadratic embedding does not land on the unit sphere")
    img2 = np.array([veronese_point(-q) for q in p])
    if np.max(np.abs(img - img2)) > 1e-12:
        raise AssertionError("quadratic embedding is not antipodally invariant")


def veronese_submanifold(seed=0) -> ParametrizedSubmanifold:
    """A 2-parameter chart of the Veronese surface in S^4, centered at a
    seeded random point of S^2, with analytic differential."""
    rng = np.random.default_rng(seed)
    _verify_veronese(rng)
    p0 = rng.normal(size=3)
    p0 /= np.linalg.norm(p0)
    basis = np.linalg.svd(p0[None, :], full_matrices=True)[2][1:]

    def chart(sq):
        m = p0 + sq @ basis
        return m / np.linalg.norm(m)

    def point_fn(sq):
        return veronese_point(chart(sq))

    def jac_fn(sq):
        m = p0 + sq @ basis
        nm = np.linalg.norm(m)
        p = m / nm
        dchart = (np.eye(3) - np.outer(p, p)) @ basis.T / nm
        return _veronese_jac_at(p) @ dchart

    def sample_fn(rng_):
        return rng_.normal(size=2) * 0.4

    return ParametrizedSubmanifold(
        point_fn=point_fn, nparams=2, ambient_dim=5, jac_fn=jac_fn,
        sample_fn=sample_fn,
    )


def cartan_tube(t: float = 0.4, seed=0) -> S4Hypersurface:
    """A chart of the tube of radius t over the Veronese surface: the
    isoparametric family with three distinct principal curvatures.

    t must stay inside (0, pi/3) and away from the focal radii {0, pi/3}.
    """
    if not (0.0 < t < np.pi / 3.0):
        raise ArgumentError("tube radius must lie in (0, pi/3)")
    sub = veronese_submanifold(seed)
    rng = np.random.default_rng(seed)
    tb = Tube(sub, t)
    center = sub.sample_fn(rng)
    x0 = sub.point_fn(center)
    jac0 = sub.jacobian(center)
    rows = np.vstack([x0[None, :], jac0.T])
    frame = np.linalg.svd(rows, full_matrices=True)[2][rows.shape[0]:]
    gvec = rng.normal(size=frame.shape[0])
    xi0 = frame.T @ (gvec / np.linalg.norm(gvec))
    chart = tb.chart(center, xi0)

    def sample_fn(rng_):
        return rng_.normal(size=3) * 0.25

    return S4Hypersurface(
        point_fn=chart.point_fn, normal_fn=chart.normal_fn, g=3,
        sample_fn=sample_fn, jac_fn=None, normal_noise=1e-14,
        name=f"cartan-tube(t={t:g})",
        meta={"kind": "cartan", "level": float(np.cos(3.0 * t)), "warp_c": 1.0,
              "pole": DEFAULT_POLE, "radius": float(t)},
    )


# ---------------------------------------------------------------------------
# conformal warping


def mobius_warp(c: float, pole, surface: S4Hypersurface) -> S4Hypersurface:
    """Conformal dilation by c in the stereographic chart at ``pole``.

    The warped normal is the (normalized) pushforward of the base normal;
    conformality keeps it orthogonal to the warped tangent space. The
    surface must stay clear of the pole before and after warping.
    """
    if c <= 0.0:
        raise ArgumentError("warp factor must be positive")
    if c == 1.0:
        return surface
    pole = np.asarray(pole, dtype=float)
    if abs(pole @ pole - 1.0) > 1e-10:
        raise ArgumentError("pole must be a unit vector")

    def point_fn(q):
        x = surface.point(q)
        if 1.0 - x @ pole < 1e-3:
            raise ChartDomainError("surface point within 1e-3 of the warp pole")
        y = kern.mobius_point(x, pole, c)
        if 1.0 - y @ pole < 5e-7:
            raise ChartDomainError("warped point within 1e-3 of the warp pole")
        return y

    def normal_fn(q):
        x = surface.point(q)
        if 1.0 - x @ pole < 1e-3:
            raise ChartDomainError("surface point within 1e-3 of the warp pole")
        jw = kern.mobius_jac(x, pole, c)
        nu = jw @ surface.normal(q)
        return nu / np.linalg.norm(nu)

    jac_fn = None
    if surface.jac_fn is not None:
        def jac_fn(q):
            x = surface.point(q)
            return kern.mobius_jac(x, pole, c) @ surface.jac_fn(q)

    meta = dict(surface.meta)
    meta["warp_c"] = float(c) * meta.get("warp_c", 1.0)
    meta["pole"] = pole
    return S4Hypersurface(
        point_fn=point_fn, normal_fn=normal_fn, g=surface.g,
        sample_fn=surface.sample_fn, jac_fn=jac_fn,
        normal_noise=surface.normal_noise, name=f"warp(c={c:g}) {surface.name}",
        meta=meta,
    )


# ---------------------------------------------------------------------------
# the Hopf fibration


def hopf(u: Quaternion, v: Quaternion) -> np.ndarray:
    """(2 u conj(v), |u|^2 - |v|^2) on S^4, for |u|^2 + |v|^2 = 1."""
    uv = np.concatenate([u.as_array(), v.as_array()])
    if abs(uv @ uv - 1.0) > 1e-10:
        raise ArgumentError("need |u|^2 + |v|^2 = 1")
    return kern.hopf5(uv)


@dataclass(frozen=True)
class LiftPoint:
    """A fiber point over (w, t): ambient (u, v) with h(u, v) = (w, t)."""

    w: np.ndarray
    t: float
    z: np.ndarray
    ambient: np.ndarray

    def uv(self):
        return Quaternion.from_array(self.ambient[:4]), Quaternion.from_array(self.ambient[4:])


def fiber_param(w: Quaternion, t: float, z: Quaternion, chart: int = 1):
    """Fiber trivialization (u, v) = (wz / sqrt(2(1-t)), sqrt((1-t)/2) z).

    chart=+1 excludes the pole (0, 1); chart=-1 uses the mirrored formula
    excluding (0, -1).
    """
    warr, zarr = w.as_array(), z.as_array()
    if abs(warr @ warr + t * t - 1.0) > 1e-10:
        raise ArgumentError("need |w|^2 + t^2 = 1")
    if abs(z.norm() - 1.0) > 1e-10:
        raise ArgumentError("fiber coordinate z must be unit")
    if chart not in (1, -1):
        raise ArgumentError("chart must be +1 or -1")
    if chart * t > 1.0 - 1e-8:
        raise ChartDomainError(f"base point too close to the chart pole (t = {t:.6f})")
    uv = kern.fiber_point(warr, float(t), zarr, chart)
    return Quaternion.from_array(uv[:4]), Quaternion.from_array(uv[4:])


def lift_point(w, t, z, chart: int = 1) -> LiftPoint:
    u, v = fiber_param(Quaternion.from_array(np.asarray(w, dtype=float)), t,
                       Quaternion.from_array(np.asarray(z, dtype=float)), chart)
    amb = np.concatenate([u.as_array(), v.as_array()])
    return LiftPoint(w=np.asarray(w, dtype=float), t=float(t),
                     z=np.asarray(z, dtype=float), ambient=amb)


def _pick_chart(surface: S4Hypersurface, rng, probes: int = 48) -> int:
    ts = [surface.point(surface.sample_fn(rng))[4] for _ in range(probes)]
    margin_plus = 1.0 - max(ts)
    margin_minus = 1.0 + min(ts)
    chart = 1 if margin_plus >= margin_minus else -1
    if max(margin_plus, margin_minus) < 1e-2:
        raise ChartDomainError(
            "surface approaches both fiber-chart poles; no single chart covers it"
        )
    return chart


def lift(surface: S4Hypersurface, chart: int = None, z0=None,
         seed=0) -> ParametrizedHypersurface:
    """The Hopf preimage of a surface chart, as a 6-parameter hypersurface
    chart of S^7 (3 base parameters, then 3 fiber parameters).

    The unit normal is the horizontal lift (dh^T nu) / 2 of the base
    normal: it is exactly orthogonal to the lifted tangent space, smooth,
    and consistently oriented. The returned object carries the attributes
    ``base_surface``, ``chart_sign``, ``fiber_frame`` and ``z_center``.
    """
    rng = np.random.default_rng(seed)
    if chart is None:
        chart = _pick_chart(surface, rng)
    if chart not in (1, -1):
        raise ArgumentError("chart must be +1 or -1")
    if z0 is None:
        z0 = np.array([1.0, 0.0, 0.0, 0.0])
    z0 = np.asarray(z0, dtype=float)
    z0 = z0 / np.linalg.norm(z0)
    zframe = np.linalg.svd(z0[None, :], full_matrices=True)[2][1:]

    def zchart(y):
        m = z0 + y @ zframe
        return m / np.linalg.norm(m)

    def point_fn(q):
        q = np.asarray(q, dtype=float)
        base = surface.point(q[:3])
        w, t = base[:4], base[4]
        if chart * t > 1.0 - 1e-2:
            raise ChartDomainError(f"sample too close to the fiber-chart pole (t = {t:.6f})")
        return kern.fiber_point(w, t, zchart(q[3:]), chart)

    def normal_fn(q):
        q = np.asarray(q, dtype=float)
        nu5 = surface.normal(q[:3])
        x8 = point_fn(q)
        return kern.hopf_jac(x8).T @ nu5 / 2.0

    jac_fn = None
    if surface.jac_fn is not None:
        def jac_fn(q):
            q = np.asarray(q, dtype=float)
            base = surface.point(q[:3])
            w, t = base[:4], base[4]
            bjac = surface.jac_fn(q[:3])
            m = z0 + q[3:] @ zframe
            nm = np.linalg.norm(m)
            z = m / nm
            dz = (np.eye(4) - np.outer(z, z)) @ zframe.T / nm
            fj = kern.fiber_jac(w, t, z, chart)
            out = np.empty((8, 6))
            out[:, :3] = fj[:, :5] @ bjac
            out[:, 3:] = fj[:, 5:] @ dz
            return out

    hyp = ParametrizedHypersurface(
        point_fn=point_fn, normal_fn=normal_fn, nparams=6, ambient_dim=8,
        jac_fn=jac_fn, normal_noise=surface.normal_noise,
        name=f"hopf-lift of {surface.name}",
    )
    hyp.base_surface = surface
    hyp.chart_sign = chart
    hyp.fiber_frame = zframe
    hyp.z_center = z0
    return hyp


def lift_normal_complement(lifted: ParametrizedHypersurface, q) -> np.ndarray:
    """The lift normal recomputed as the orthogonal complement of the
    lifted tangent space, sign-matched to the horizontal lift. Used to
    cross-validate the closed-form normal."""
    q = np.asarray(q, dtype=float)
    x = np.asarray(lifted.point_fn(q), dtype=float)
    jac = lifted.jacobian(q)
    rows = np.vstack([x[None, :], jac.T])
    comp = np.linalg.svd(rows, full_matrices=True)[2][-1]
    ref = np.asarray(lifted.normal_fn(q), dtype=float)
    return comp if comp @ ref >= 0.0 else -comp


# ---------------------------------------------------------------------------
# curvature doubling


def _doubling_targets(base_values, base_mults):
    """Predicted lifted spectrum: each cot(theta) contributes cot(theta/2)
    and cot((theta + pi)/2) with the base multiplicity."""
    preds = []
    for val, mult in zip(base_values, base_mults):
        theta = float(np.arctan2(1.0, val))
        preds.append((1.0 / np.tan(theta / 2.0), int(mult), theta))
        preds.append((1.0 / np.tan((theta + np.pi) / 2.0), int(mult), theta))
    preds.sort(key=lambda p: p[0])
    return preds


@dataclass
class DoublingSample:
    base_values: np.ndarray
    base_mults: tuple
    lift_values: np.ndarray
    lift_mults: tuple
    predicted: np.ndarray
    match_error: float
    mults_ok: bool


@dataclass
class DoublingReport:
    g_base: int
    samples: list
    failures: list

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def max_match_error(self) -> float:
        return max((s.match_error for s in self.samples), default=np.inf)

    def lines(self):
        yield (
            f"doubling check: g = {self.g_base} -> {2 * self.g_base}, "
            f"{len(self.samples)} samples, max match error "
            f"{self.max_match_error:.3e}"
        )
        for f in self.failures:
            yield f"  FAIL {f}"


def lifted_spectrum_check(surface: S4Hypersurface, samples: int = 20, seed=0,
                          match_tol: float = 1e-4,
                          cluster_tol: float = 1e-3) -> DoublingReport:
    """Verify that the lift's principal curvatures are the half-angle
    doubles of the base curvatures, multiplicities transported."""
    lifted = lift(surface, seed=seed)
    rng = np.random.default_rng(seed)
    rep = DoublingReport(g_base=surface.g, samples=[], failures=[])
    base_hyp = surface.as_hyp()
    for i in range(samples):
        q3 = surface.sample_fn(rng)
        y = rng.normal(size=3) * 0.3
        bres = hyp_spectrum(base_hyp, q3, tol=cluster_tol)
        if bres.spectrum.g != surface.g:
            rep.failures.append(
                f"sample {i}: base has {bres.spectrum.g} clusters, declared {surface.g}"
            )
            continue
        lres = hyp_spectrum(lifted, np.concatenate([q3, y]), tol=cluster_tol)
        preds = _doubling_targets(bres.spectrum.values, bres.spectrum.multiplicities)
        pred_vals = np.array([p[0] for p in preds])
        pred_mults = tuple(p[1] for p in preds)
        mults_ok = (
            lres.spectrum.g == 2 * surface.g
            and tuple(int(v) for v in lres.spectrum.multiplicities) == pred_mults
        )
        if not mults_ok:
            rep.failures.append(
                f"sample {i}: lift clusters {lres.spectrum.values} mults "
                f"{tuple(lres.spectrum.multiplicities)}, expected mults {pred_mults}"
            )
            err = np.inf
        else:
            err = float(np.max(np.abs(lres.spectrum.values - pred_vals)))
            if err > match_tol:
                rep.failures.append(f"sample {i}: match error {err:.3e} > {match_tol:.1e}")
        # the doubling map itself is exact: both half-angles return to the
        # base focal radius modulo pi
        for _, _, theta in preds:
            for phi in (theta / 2.0, (theta + np.pi) / 2.0):
                dd = (2.0 * phi - theta) % np.pi
                assert min(dd, np.pi - dd) < 1e-10
        rep.samples.append(DoublingSample(
            base_values=bres.spectrum.values.copy(),
            base_mults=tuple(int(v) for v in bres.spectrum.multiplicities),
            lift_values=lres.spectrum.values.copy(),
            lift_mults=tuple(int(v) for v in lres.spectrum.multiplicities),
            predicted=pred_vals,
            match_error=err,
            mults_ok=mults_ok,
        ))
    return rep


# ---------------------------------------------------------------------------
# Lie curvature of the lift


def psi_mo(theta: float, alpha: float) -> float:
    """2 / (1 + cos(theta - alpha)): the cross ratio of the two doubled
    curvature pairs in the pairing (l+, l-; m+, m-)."""
    denom = 1.0 + np.cos(theta - alpha)
    if abs(denom) < 1e-14:
        raise DegenerateCrossRatioError("theta - alpha = pi: pairing cross ratio pole")
    return 2.0 / denom


def pairing_cross_ratio(lam_p, lam_m, mu_p, mu_m) -> float:
    """(l+ - l-)(m+ - m-) / ((l+ - m-)(m+ - l-)) with infinities handled
    projectively."""
    return cross_ratio(
        ProjParam.from_curvature(lam_p),
        ProjParam.from_curvature(lam_m),
        ProjParam.from_curvature(mu_m),
        ProjParam.from_curvature(mu_p),
    )


@dataclass
class PsiMoSample:
    theta: float
    alpha: float
    psi_formula: float
    psi_pairing: float
    psi_ordered: float


@dataclass
class PsiMoScan:
    samples: list
    failures: list

    def pairing_values(self) -> np.ndarray:
        return np.array([s.psi_pairing for s in self.samples])

    def ordered_values(self) -> np.ndarray:
        return np.array([s.psi_ordered for s in self.samples])

    @property
    def spread(self) -> float:
        v = self.pairing_values()
        return float(v.max() - v.min())

    @property
    def max_formula_dev(self) -> float:
        return max(abs(s.psi_pairing - s.psi_formula) for s in self.samples)


def lift_psi_scan(surface: S4Hypersurface, samples: int = 50, seed=0,
                  cluster_tol: float = 1e-3) -> PsiMoScan:
    """Scan the lift's Lie curvature (both the doubling pairing and the
    ascending-order convention) across samples of a g=2 base surface."""
    if surface.g != 2:
        raise ArgumentError("the four-curvature scan needs a g=2 base surface")
    lifted = lift(surface, seed=seed)
    rng = np.random.default_rng(seed)
    base_hyp = surface.as_hyp()
    scan = PsiMoScan(samples=[], failures=[])
    for i in range(samples):
        q3 = surface.sample_fn(rng)
        y = rng.normal(size=3) * 0.3
        bres = hyp_spectrum(base_hyp, q3, tol=cluster_tol)
        if bres.spectrum.g != 2:
            scan.failures.append(f"sample {i}: base clusters != 2")
            continue
        lres = hyp_spectrum(lifted, np.concatenate([q3, y]), tol=cluster_tol)
        if lres.spectrum.g != 4:
            scan.failures.append(f"sample {i}: lift clusters != 4")
            continue
        kappa1, kappa2 = bres.spectrum.values
        theta = float(np.arctan2(1.0, kappa1))
        alpha = float(np.arctan2(1.0, kappa2))
        # identify measured lift clusters with the four predicted doubles
        preds = _doubling_targets(bres.spectrum.values, bres.spectrum.multiplicities)
        measured = lres.spectrum.values
        matched = {}
        for val, _, th in preds:
            idx = int(np.argmin(np.abs(measured - val)))
            key = "p" if abs(1.0 / np.tan(th / 2.0) - val) < 1e-12 else "m"
            matched[(round(th, 12), key)] = measured[idx]
        lam_p = matched[(round(theta, 12), "p")]
        lam_m = matched[(round(theta, 12), "m")]
        mu_p = matched[(round(alpha, 12), "p")]
        mu_m = matched[(round(alpha, 12), "m")]
        vals = [ProjParam.from_curvature(v) for v in measured]
        scan.samples.append(PsiMoSample(
            theta=theta,
            alpha=alpha,
            psi_formula=psi_mo(theta, alpha),
            psi_pairing=pairing_cross_ratio(lam_p, lam_m, mu_p, mu_m),
            psi_ordered=cross_ratio(*vals),
        ))
    return scan
