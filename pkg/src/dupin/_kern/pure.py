"""Pure NumPy implementations of the hot evaluation kernels.

The compiled backend (`dupin._kern._fast`) mirrors every public function in
this module exactly; parity is enforced by tests. Keep the two in sync.

Conventions:
  * quaternions are length-4 float arrays (w, x, y, z);
  * points of S^7 are length-8 arrays (u; v) with u, v quaternions;
  * points of S^4 are length-5 arrays (w; t) with w a quaternion, t real;
  * Clifford matrix families are (m-1, l, l) float arrays;
  * deformation parameters enter as (alpha, beta) with alpha^2 + beta^2 = 1.
"""

from __future__ import annotations

import numpy as np

BACKEND = "pure"

_SQ3 = np.sqrt(3.0)


# ---------------------------------------------------------------------------
# quaternion primitives


def qmul4(a, b):
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    w1, x1, y1, z1 = a
    w2, x2, y2, z2 = b
    return np.array(
        [
            w1 * w2 - x1 * x2 - y1 * y2 - z1 * z2,
            w1 * x2 + x1 * w2 + y1 * z2 - z1 * y2,
            w1 * y2 - x1 * z2 + y1 * w2 + z1 * x2,
            w1 * z2 + x1 * y2 - y1 * x2 + z1 * w2,
        ]
    )


def qconj4(a):
    a = np.asarray(a, dtype=float)
    return np.array([a[0], -a[1], -a[2], -a[3]])


def _lmat(q):
    # matrix of p -> q p
    w, x, y, z = q
    return np.array(
        [
            [w, -x, -y, -z],
            [x, w, -z, y],
            [y, z, w, -x],
            [z, -y, x, w],
        ]
    )


def _rmat(q):
    # matrix of p -> p q
    w, x, y, z = q
    return np.array(
        [
            [w, -x, -y, -z],
            [x, w, z, -y],
            [y, -z, w, x],
            [z, y, -x, w],
        ]
    )


# ---------------------------------------------------------------------------
# Hopf map S^7 -> S^4 and its differential


def hopf5(uv):
    uv = np.asarray(uv, dtype=float)
    u, v = uv[:4], uv[4:]
    w = 2.0 * qmul4(u, qconj4(v))
    return np.concatenate([w, [u @ u - v @ v]])


def hopf5_batch(UV):
    UV = np.asarray(UV, dtype=float)
    u, v = UV[:, :4], UV[:, 4:]
    w1, x1, y1, z1 = u.T
    w2, x2, y2, z2 = (v * np.array([1.0, -1.0, -1.0, -1.0])).T
    w = 2.0 * np.stack(
        [
            w1 * w2 - x1 * x2 - y1 * y2 - z1 * z2,
            w1 * x2 + x1 * w2 + y1 * z2 - z1 * y2,
            w1 * y2 - x1 * z2 + y1 * w2 + z1 * x2,
            w1 * z2 + x1 * y2 - y1 * x2 + z1 * w2,
        ],
        axis=1,
    )
    t = np.einsum("bi,bi->b", u, u) - np.einsum("bi,bi->b", v, v)
    return np.concatenate([w, t[:, None]], axis=1)


_CONJ = np.diag([1.0, -1.0, -1.0, -1.0])


def hopf_jac(uv):
    uv = np.asarray(uv, dtype=float)
    u, v = uv[:4], uv[4:]
    jac = np.zeros((5, 8))
    jac[:4, :4] = 2.0 * _rmat(qconj4(v))
    jac[:4, 4:] = 2.0 * _lmat(u) @ _CONJ
    jac[4, :4] = 2.0 * u
    jac[4, 4:] = -2.0 * v
    return jac


def hopf_jac_batch(UV):
    UV = np.asarray(UV, dtype=float)
    out = np.empty((UV.shape[0], 5, 8))
    for i in range(UV.shape[0]):
        out[i] = hopf_jac(UV[i])
    return out


# ---------------------------------------------------------------------------
# fiber charts of the Hopf map
#
# chart +1 (valid away from (0, 1)):  u = w z / sqrt(2(1-t)),  v = sqrt((1-t)/2) z
# chart -1 (valid away from (0,-1)):  u = sqrt((1+t)/2) z,     v = conj(w) z / sqrt(2(1+t))


def fiber_point(w, t, z, chart=1):
    w = np.asarray(w, dtype=float)
    z = np.asarray(z, dtype=float)
    if chart == 1:
        s1 = 1.0 / np.sqrt(2.0 * (1.0 - t))
        s2 = np.sqrt((1.0 - t) / 2.0)
        return np.concatenate([s1 * qmul4(w, z), s2 * z])
    s1 = 1.0 / np.sqrt(2.0 * (1.0 + t))
    s2 = np.sqrt((1.0 + t) / 2.0)
    return np.concatenate([s2 * z, s1 * qmul4(qconj4(w), z)])


def fiber_jac(w, t, z, chart=1):
    """Differential of fiber_point w.r.t. (w0..w3, t, z0..z3), shape (8, 9)."""
    w = np.asarray(w, dtype=float)
    z = np.asarray(z, dtype=float)
    jac = np.zeros((8, 9))
    if chart == 1:
        s1 = 1.0 / np.sqrt(2.0 * (1.0 - t))
        s2 = np.sqrt((1.0 - t) / 2.0)
        wz = qmul4(w, z)
        jac[:4, :4] = s1 * _rmat(z)
        jac[:4, 4] = s1**3 * wz
        jac[:4, 5:] = s1 * _lmat(w)
        jac[4:, 4] = -(s1 / 2.0) * z
        jac[4:, 5:] = s2 * np.eye(4)
    else:
        s1 = 1.0 / np.sqrt(2.0 * (1.0 + t))
        s2 = np.sqrt((1.0 + t) / 2.0)
        wbz = qmul4(qconj4(w), z)
        jac[:4, 4] = (s1 / 2.0) * z
        jac[:4, 5:] = s2 * np.eye(4)
        jac[4:, :4] = s1 * _rmat(z) @ _CONJ
        jac[4:, 4] = -(s1**3) * wbz
        jac[4:, 5:] = s1 * _lmat(qconj4(w))
    return jac


# ---------------------------------------------------------------------------
# Möbius warp of S^4: stereographic projection from `pole`, dilation by c,
# inverse projection. W_c with c=1 is the identity; W_c o W_d = W_{cd}.


def _stereo(x, pole):
    denom = 1.0 - x @ pole
    return (x - (x @ pole) * pole) / denom


def _unstereo(y, pole):
    n2 = y @ y
    return ((n2 - 1.0) * pole + 2.0 * y) / (n2 + 1.0)


def mobius_point(x, pole, c):
    x = np.asarray(x, dtype=float)
    pole = np.asarray(pole, dtype=float)
    return _unstereo(c * _stereo(x, pole), pole)


def mobius_jac(x, pole, c):
    x = np.asarray(x, dtype=float)
    pole = np.asarray(pole, dtype=float)
    n = x.size
    eye = np.eye(n)
    xp = x @ pole
    denom = 1.0 - xp
    y = (x - xp * pole) / denom
    # d sigma: (v - (v.P)P)/denom + (x - (x.P)P)(v.P)/denom^2
    dsig = (eye - np.outer(pole, pole)) / denom + np.outer(x - xp * pole, pole) / denom**2
    cy = c * y
    n2 = cy @ cy
    # d sigma^{-1} at cy
    dinv = (2.0 * np.outer(pole, cy) + 2.0 * eye) / (n2 + 1.0) - np.outer(
        (n2 - 1.0) * pole + 2.0 * cy, 2.0 * cy
    ) / (n2 + 1.0) ** 2
    return dinv @ (c * dsig)


def mobius_point_batch(X, pole, c):
    X = np.asarray(X, dtype=float)
    pole = np.asarray(pole, dtype=float)
    xp = X @ pole
    denom = 1.0 - xp
    Y = c * (X - xp[:, None] * pole) / denom[:, None]
    n2 = np.einsum("bi,bi->b", Y, Y)
    return ((n2 - 1.0)[:, None] * pole + 2.0 * Y) / (n2 + 1.0)[:, None]


def mobius_jac_batch(X, pole, c):
    X = np.asarray(X, dtype=float)
    out = np.empty((X.shape[0], X.shape[1], X.shape[1]))
    for i in range(X.shape[0]):
        out[i] = mobius_jac(X[i], pole, c)
    return out


# ---------------------------------------------------------------------------
# Cartan cubic on R^5 via traceless symmetric 3x3 matrices.
# F(x) = (3 sqrt(3)/2) det S(x); on the unit sphere F ranges over [-1, 1]
# and |grad F|^2 = 9 |x|^4.


def _smat(x):
    x1, x2, x3, x4, x5 = x
    return np.array(
        [
            [x5 / _SQ3 + x4, x1, x2],
            [x1, x5 / _SQ3 - x4, x3],
            [x2, x3, -2.0 * x5 / _SQ3],
        ]
    )


def cartan_val(x):
    x = np.asarray(x, dtype=float)
    return 1.5 * _SQ3 * np.linalg.det(_smat(x))


def cartan_grad(x):
    x = np.asarray(x, dtype=float)
    s = _smat(x)
    s2 = s @ s
    return 3.0 * _SQ3 * np.array(
        [
            s2[0, 1],
            s2[0, 2],
            s2[1, 2],
            (s2[0, 0] - s2[1, 1]) / 2.0,
            (s2[0, 0] + s2[1, 1] - 2.0 * s2[2, 2]) / (2.0 * _SQ3),
        ]
    )


def cartan_val_batch(X):
    X = np.asarray(X, dtype=float)
    x1, x2, x3, x4, x5 = X.T
    a = x5 / _SQ3 + x4
    b = x5 / _SQ3 - x4
    d = -2.0 * x5 / _SQ3
    det = a * (b * d - x3 * x3) - x1 * (x1 * d - x3 * x2) + x2 * (x1 * x3 - b * x2)
    return 1.5 * _SQ3 * det


def cartan_grad_batch(X):
    X = np.asarray(X, dtype=float)
    out = np.empty_like(X)
    for i in range(X.shape[0]):
        out[i] = cartan_grad(X[i])
    return out


# ---------------------------------------------------------------------------
# composed level-set constraint used by the critical-point search.
# base_kind 0: cyclide residual  x1^2 + x2^2 - pval^2  on S^4
# base_kind 1: Cartan cubic      F(x) - pval           on S^4
# invc != 1 pulls the point back through the Möbius warp first; lifted=True
# composes with the Hopf map (constraint on S^7).


def mo_val_batch(X, base_kind, pval, invc, pole, lifted):
    X = np.asarray(X, dtype=float)
    Y = hopf5_batch(X) if lifted else X
    if invc != 1.0:
        Y = mobius_point_batch(Y, pole, invc)
    if base_kind == 0:
        return Y[:, 0] ** 2 + Y[:, 1] ** 2 - pval * pval
    return cartan_val_batch(Y) - pval


def mo_grad_batch(X, base_kind, pval, invc, pole, lifted):
    X = np.asarray(X, dtype=float)
    Y = hopf5_batch(X) if lifted else X
    Z = mobius_point_batch(Y, pole, invc) if invc != 1.0 else Y
    if base_kind == 0:
        g = np.zeros_like(Z)
        g[:, 0] = 2.0 * Z[:, 0]
        g[:, 1] = 2.0 * Z[:, 1]
    else:
        g = cartan_grad_batch(Z)
    if invc != 1.0:
        Jm = mobius_jac_batch(Y, pole, invc)
        g = np.einsum("bi,bij->bj", g, Jm)
    if lifted:
        Jh = hopf_jac_batch(X)
        g = np.einsum("bi,bij->bj", g, Jh)
    return g


def mo_guard_batch(X, invc, pole, lifted, margin=1e-6):
    """True where the warp pullback is safely defined (away from the pole)."""
    X = np.asarray(X, dtype=float)
    if invc == 1.0:
        return np.ones(X.shape[0], dtype=bool)
    Y = hopf5_batch(X) if lifted else X
    pole = np.asarray(pole, dtype=float)
    return np.abs(1.0 - Y @ pole) > margin


# ---------------------------------------------------------------------------
# Clifford-Stiefel constraint family on S^{2l-1}, deformation parameters
# (alpha, beta). Constraint order is fixed:
#   F0 = -beta/(2 alpha) |u|^2 + alpha/(2 beta) |v|^2
#   F1 = -u . v
#   F_{1+i} = (E_i u . v) / (2 alpha beta)        i = 1..m-1
# At alpha = beta = 1/sqrt(2) the zero set is the Clifford-Stiefel manifold.


def ptc_values(x, E, alpha, beta):
    x = np.asarray(x, dtype=float)
    l = x.size // 2
    u, v = x[:l], x[l:]
    vals = np.empty(2 + len(E))
    vals[0] = -beta / (2.0 * alpha) * (u @ u) + alpha / (2.0 * beta) * (v @ v)
    vals[1] = -(u @ v)
    scale = 1.0 / (2.0 * alpha * beta)
    for i, Ei in enumerate(E):
        vals[2 + i] = scale * (Ei @ u) @ v
    return vals


def ptc_grads(x, E, alpha, beta):
    x = np.asarray(x, dtype=float)
    l = x.size // 2
    u, v = x[:l], x[l:]
    g = np.empty((2 + len(E), 2 * l))
    g[0, :l] = -beta / alpha * u
    g[0, l:] = alpha / beta * v
    g[1, :l] = -v
    g[1, l:] = -u
    scale = 1.0 / (2.0 * alpha * beta)
    for i, Ei in enumerate(E):
        g[2 + i, :l] = scale * (Ei.T @ v)
        g[2 + i, l:] = scale * (Ei @ u)
    return g


def ptc_project(x0, E, alpha, beta, tol=1e-13, maxiter=50):
    """Newton-project x0 onto {|x| = 1} intersected with the constraint set.

    Minimal-norm update steps: delta = J^T (J J^T)^{-1} (-F). Returns
    (x, residual, iterations); the caller decides whether the residual is
    acceptable.
    """
    x = np.asarray(x0, dtype=float).copy()
    k = 3 + len(E)
    best = None
    for it in range(1, maxiter + 1):
        vals = ptc_values(x, E, alpha, beta)
        f = np.empty(k)
        f[0] = (x @ x - 1.0) / 2.0
        f[1:] = vals
        resid = np.max(np.abs(f))
        if best is None or resid < best[1]:
            best = (x.copy(), resid, it - 1)
        if resid < tol:
            return x, resid, it - 1
        jac = np.empty((k, x.size))
        jac[0] = x
        jac[1:] = ptc_grads(x, E, alpha, beta)
        gram = jac @ jac.T
        try:
            lam = np.linalg.solve(gram, -f)
        except np.linalg.LinAlgError:
            break
        x = x + jac.T @ lam
    x, resid, it = best
    return x, resid, it
