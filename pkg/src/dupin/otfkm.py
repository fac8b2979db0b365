"""Clifford-Stiefel focal submanifolds V2(C_{m-1}) and their certification.

V2 is the set of pairs (u, v) with |u|^2 = |v|^2 = 1/2, u.v = 0, and
E_i u.v = 0 for every structure in the Clifford system: the focal
submanifold of the OT-FKM isoparametric family in S^{2l-1}. Its shape
operators have spectrum {-1, 0, 1} with multiplicities
(l-m-1, m, l-m-1) for every unit normal, giving Lie curvature 1/2.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .clifford import CliffordSystem
from .engine import CliffordStiefelManifold, lie_curvature, principal_spectrum, random_normal
from .errors import AdmissibilityError

__all__ = [
    "FramePoint",
    "check_admissible",
    "sample_v2",
    "v2_manifold",
    "v2_spectrum_certify",
    "CertifyReport",
]

HALF_NORM = 1.0 / np.sqrt(2.0)


@dataclass(frozen=True)
class FramePoint:
    """A Clifford orthogonal 2-frame (u, v) of length 1/sqrt(2) each."""

    u: np.ndarray
    v: np.ndarray

    def point(self) -> np.ndarray:
        return np.concatenate([self.u, self.v])

    def residual(self, system: CliffordSystem = None) -> float:
        r = max(
            abs(self.u @ self.u - 0.5),
            abs(self.v @ self.v - 0.5),
            abs(float(self.u @ self.v)),
        )
        if system is not None:
            for e in system.mats:
                r = max(r, abs(float((e @ self.u) @ self.v)))
        return r


def check_admissible(system: CliffordSystem) -> None:
    """The focal construction needs l > m + 1 (positive spectral multiplicities)."""
    if system.l <= system.m + 1:
        raise AdmissibilityError(
            f"need l > m+1 for V2(C_(m-1)); got m={system.m}, l={system.l}"
        )


def v2_manifold(system: CliffordSystem) -> CliffordStiefelManifold:
    """V2(C_{m-1}) in S^{2l-1} as a constraint manifold of codimension m+1."""
    check_admissible(system)
    return CliffordStiefelManifold(system, alpha=HALF_NORM, beta=HALF_NORM)


def sample_v2(system: CliffordSystem, seed, count: int):
    """Newton-projected random frame points; residuals below 1e-12."""
    man = v2_manifold(system)
    pts = man.random_points(np.random.default_rng(seed), count)
    l = system.l
    out = []
    for x in pts:
        fp = FramePoint(u=x[:l].copy(), v=x[l:].copy())
        assert fp.residual(system) < 1e-12
        out.append(fp)
    return out


@dataclass
class CertifyReport:
    """Aggregate spectral certification of V2 over sampled (point, normal) pairs."""

    m: int
    l: int
    samples: int
    normals_per_sample: int
    expected_multiplicities: tuple
    max_value_dev: float = 0.0
    max_psi_dev: float = 0.0
    max_normal_spread: float = 0.0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def lines(self):
        yield (
            f"V2(C_{self.m - 1}) in S^{2 * self.l - 1}: {self.samples} samples x "
            f"{self.normals_per_sample} normals, multiplicities {self.expected_multiplicities}"
        )
        yield f"  max |eigenvalue - target| = {self.max_value_dev:.3e}"
        yield f"  max |Psi - 1/2|          = {self.max_psi_dev:.3e}"
        yield f"  max cross-normal spread  = {self.max_normal_spread:.3e}"
        for f in self.failures:
            yield f"  FAIL {f}"


def v2_spectrum_certify(system: CliffordSystem, samples: int = 10,
                        normals_per_sample: int = 5, seed=0,
                        value_tol: float = 1e-6) -> CertifyReport:
    """Check eigenvalues {-1,0,1}, multiplicities (l-m-1, m, l-m-1), and
    Psi = 1/2 at every sampled point and random unit normal."""
    man = v2_manifold(system)
    m, l = system.m, system.l
    expected = (l - m - 1, m, l - m - 1)
    rep = CertifyReport(m=m, l=l, samples=samples, normals_per_sample=normals_per_sample,
                        expected_multiplicities=expected)
    rng = np.random.default_rng(seed)
    pts = man.random_points(rng, samples)
    targets = np.array([-1.0, 0.0, 1.0])
    for i, x in enumerate(pts):
        per_normal = []
        for j in range(normals_per_sample):
            nu = random_normal(man, x, rng)
            res = principal_spectrum(man, x, nu)
            if res.spectrum.g != 3 or tuple(res.spectrum.multiplicities) != expected:
                rep.failures.append(
                    f"sample {i} normal {j}: clusters {res.spectrum.values} "
                    f"mults {tuple(res.spectrum.multiplicities)} != {expected}"
                )
                continue
            dev = float(np.max(np.abs(res.spectrum.values - targets)))
            rep.max_value_dev = max(rep.max_value_dev, dev)
            if dev > value_tol:
                rep.failures.append(f"sample {i} normal {j}: value deviation {dev:.3e}")
            if res.infinite_mult != m:
                rep.failures.append(
                    f"sample {i} normal {j}: infinite_mult {res.infinite_mult} != {m}"
                )
            psi = lie_curvature(res)
            pdev = abs(psi - 0.5)
            rep.max_psi_dev = max(rep.max_psi_dev, pdev)
            if pdev > value_tol:
                rep.failures.append(f"sample {i} normal {j}: Psi deviation {pdev:.3e}")
            per_normal.append(res.spectrum.values.copy())
        if len(per_normal) > 1:
            arr = np.array(per_normal)
            spread = float(np.max(arr.max(axis=0) - arr.min(axis=0)))
            rep.max_normal_spread = max(rep.max_normal_spread, spread)
    return rep
