"""Lie sphere coordinates for oriented spheres in S^n.

An oriented sphere with center p in S^n and signed radius rho is the
projective point [(cos rho, p, sin rho)] in R^{n+3} carrying the signature
(n+1, 2) form

    <x, y> = -x_0 y_0 + x_1 y_1 + ... + x_{n+1} y_{n+1} - x_{n+2} y_{n+2}

(0-indexed here). Oriented spheres live on the quadric <x, x> = 0; two
spheres are in oriented contact exactly when <x, y> = 0. A Legendre line
is the line spanned by the point-sphere and great-sphere coordinates of a
unit contact element (f, xi); curvature spheres slice that line at
projective parameters (cos th : sin th), and cot th is the associated
principal curvature. Cross ratios of four such parameters are invariants
of the Lie transformation group O(n+1, 2).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import expm

from .errors import ArgumentError, ChartDomainError, DegenerateCrossRatioError

__all__ = [
    "LieCoord",
    "ProjParam",
    "LegendreLine",
    "lie_metric",
    "lie_inner",
    "sphere_to_lie",
    "on_quadric",
    "oriented_contact",
    "cross_ratio",
    "parallel_matrix",
    "random_lie_transform",
    "legendre_line",
    "curvature_sphere",
    "reread_curvatures",
]


def lie_metric(n: int) -> np.ndarray:
    """Diagonal of the signature-(n+1, 2) form on R^{n+3}."""
    g = np.ones(n + 3)
    g[0] = -1.0
    g[-1] = -1.0
    return np.diag(g)


@dataclass(frozen=True)
class LieCoord:
    """Homogeneous coordinates of an oriented sphere (a vector in R^{n+3})."""

    x: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "x", np.asarray(self.x, dtype=float))
        if self.x.ndim != 1 or self.x.size < 4:
            raise ArgumentError("LieCoord needs a vector in R^{n+3}, n >= 1")

    @property
    def n(self) -> int:
        return self.x.size - 3

    def normalized(self) -> "LieCoord":
        """Scale so the largest-magnitude entry is +1 (report convention)."""
        i = int(np.argmax(np.abs(self.x)))
        if self.x[i] == 0.0:
            raise ArgumentError("cannot normalize the zero vector")
        return LieCoord(self.x / self.x[i])


def _vec(a) -> np.ndarray:
    return a.x if isinstance(a, LieCoord) else np.asarray(a, dtype=float)


def lie_inner(a, b) -> float:
    x, y = _vec(a), _vec(b)
    if x.shape != y.shape:
        raise ArgumentError("mismatched coordinate dimensions")
    return float(-x[0] * y[0] + x[1:-1] @ y[1:-1] - x[-1] * y[-1])


def sphere_to_lie(p, rho: float) -> LieCoord:
    """Oriented sphere of center p in S^n and signed radius rho."""
    p = np.asarray(p, dtype=float)
    if abs(p @ p - 1.0) > 1e-10:
        raise ArgumentError("center must lie on the unit sphere")
    return LieCoord(np.concatenate([[np.cos(rho)], p, [np.sin(rho)]]))


def on_quadric(a, tol: float = 1e-10) -> bool:
    x = _vec(a)
    return abs(lie_inner(x, x)) <= tol * max(1.0, x @ x)


def oriented_contact(a, b, tol: float = 1e-10) -> bool:
    """True when the two quadric points are in oriented contact."""
    x, y = _vec(a), _vec(b)
    scale = max(1.0, np.linalg.norm(x) * np.linalg.norm(y))
    return abs(lie_inner(x, y)) <= tol * scale


@dataclass(frozen=True)
class ProjParam:
    """Projective parameter (c : s) of a curvature sphere on a Legendre line.

    The associated principal curvature is c/s (cot of the line parameter);
    s = 0 encodes the infinite curvature of the point sphere itself.
    """

    c: float
    s: float

    def __post_init__(self):
        if self.c == 0.0 and self.s == 0.0:
            raise ArgumentError("(0 : 0) is not a projective parameter")

    @classmethod
    def from_curvature(cls, kappa) -> "ProjParam":
        if np.isinf(kappa):
            return cls(1.0, 0.0)
        return cls(float(kappa), 1.0)

    @classmethod
    def infinite(cls) -> "ProjParam":
        return cls(1.0, 0.0)

    @property
    def is_infinite(self) -> bool:
        return self.s == 0.0

    @property
    def kappa(self) -> float:
        return np.inf if self.s == 0.0 else self.c / self.s

    @property
    def angle(self) -> float:
        """Representative angle in [0, pi) with (c : s) = (cos : sin)."""
        th = np.arctan2(self.s, self.c) % np.pi
        return float(th)

    def normalized(self) -> "ProjParam":
        r = np.hypot(self.c, self.s)
        c, s = self.c / r, self.s / r
        if s < 0 or (s == 0 and c < 0):
            c, s = -c, -s
        return ProjParam(c, s)


def _as_param(v) -> ProjParam:
    if isinstance(v, ProjParam):
        return v
    return ProjParam.from_curvature(v)


def _det2(p: ProjParam, q: ProjParam) -> float:
    return p.c * q.s - p.s * q.c


def cross_ratio(a, b, c, d, tol: float = 1e-12) -> float:
    """Cross ratio [a, b; c, d] = (a-b)(d-c) / ((a-c)(d-b)).

    Arguments are ProjParam instances or finite curvature values; infinity
    is ProjParam.infinite(). Computed projectively through 2x2 determinants
    so infinite entries need no special casing. Raises on (projectively)
    repeated entries.
    """
    pa, pb, pc, pd = (_as_param(v).normalized() for v in (a, b, c, d))
    quad = [pa, pb, pc, pd]
    for i in range(4):
        for j in range(i + 1, 4):
            if abs(_det2(quad[i], quad[j])) < tol:
                raise DegenerateCrossRatioError(f"entries {i} and {j} coincide")
    return (_det2(pa, pb) * _det2(pd, pc)) / (_det2(pa, pc) * _det2(pd, pb))


def parallel_matrix(t: float, n: int) -> np.ndarray:
    """Rotation by t in the (e_0, e_{n+2}) plane: the parallel transform P_t."""
    m = np.eye(n + 3)
    m[0, 0] = np.cos(t)
    m[0, -1] = -np.sin(t)
    m[-1, 0] = np.sin(t)
    m[-1, -1] = np.cos(t)
    return m


def random_lie_transform(rng, n: int, scale: float = 1.0) -> np.ndarray:
    """A random element of O(n+1, 2): exp of a random metric-skew generator.

    ``scale = 0`` returns the identity. The generator is G S with S skew,
    which satisfies A^T G + G A = 0, so the exponential preserves the form.
    """
    if isinstance(rng, (int, np.integer)):
        rng = np.random.default_rng(rng)
    dim = n + 3
    r = rng.normal(size=(dim, dim))
    s = (r - r.T) / 2.0
    g = lie_metric(n)
    return expm(scale * (g @ s))


@dataclass(frozen=True)
class LegendreLine:
    """Span of the point-sphere and great-sphere coordinates of (f, xi)."""

    k1: LieCoord
    k2: LieCoord

    @property
    def n(self) -> int:
        return self.k1.n


def legendre_line(f, xi, tol: float = 1e-10) -> LegendreLine:
    f = np.asarray(f, dtype=float)
    xi = np.asarray(xi, dtype=float)
    if abs(f @ f - 1.0) > tol or abs(xi @ xi - 1.0) > tol or abs(f @ xi) > tol:
        raise ArgumentError("contact element needs unit orthogonal f, xi")
    k1 = LieCoord(np.concatenate([[1.0], f, [0.0]]))
    k2 = LieCoord(np.concatenate([[0.0], xi, [1.0]]))
    return LegendreLine(k1, k2)


def curvature_sphere(line: LegendreLine, theta: float) -> LieCoord:
    """The sphere cos(th) k1 + sin(th) k2; its curvature is cot(th)."""
    return LieCoord(np.cos(theta) * line.k1.x + np.sin(theta) * line.k2.x)


def reread_curvatures(B, line: LegendreLine, thetas) -> list[ProjParam]:
    """Apply a Lie transform to a Legendre line and re-extract parameters.

    The transformed line is re-based on its point-sphere representative
    (last coordinate 0, first scaled to 1) and great-sphere representative
    (first coordinate 0, last scaled to 1); each transformed curvature
    sphere cos(th) B k1 + sin(th) B k2 is then expressed in that basis and
    its (c : s) parameter returned. In this basis the coefficient pair can
    be read off the first and last coordinates directly.
    """
    B = np.asarray(B, dtype=float)
    a = B @ line.k1.x
    b = B @ line.k2.x
    det = a[0] * b[-1] - a[-1] * b[0]
    scale = max(np.linalg.norm(a) * np.linalg.norm(b), 1e-300)
    if abs(det) < 1e-12 * scale:
        raise ChartDomainError(
            "transformed line has degenerate point-sphere/great-sphere basis"
        )
    out = []
    for th in np.atleast_1d(np.asarray(thetas, dtype=float)):
        cth, sth = np.cos(th), np.sin(th)
        c = cth * a[0] + sth * b[0]
        s = cth * a[-1] + sth * b[-1]
        out.append(ProjParam(c, s).normalized())
    return out
