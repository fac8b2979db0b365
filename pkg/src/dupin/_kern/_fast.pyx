# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled twin of dupin._kern.pure. Same functions, same conventions."""

import numpy as np

from libc.math cimport fabs, sqrt

BACKEND = "fast"

cdef double SQ3 = sqrt(3.0)


# ---------------------------------------------------------------------------
# quaternion primitives

cdef inline void _qmul(const double *a, const double *b, double *out) noexcept nogil:
    out[0] = a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3]
    out[1] = a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2]
    out[2] = a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1]
    out[3] = a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]


cdef inline void _qconj(const double *a, double *out) noexcept nogil:
    out[0] = a[0]
    out[1] = -a[1]
    out[2] = -a[2]
    out[3] = -a[3]


def qmul4(a, b):
    cdef double[::1] av = np.ascontiguousarray(a, dtype=np.float64)
    cdef double[::1] bv = np.ascontiguousarray(b, dtype=np.float64)
    out = np.empty(4)
    cdef double[::1] ov = out
    _qmul(&av[0], &bv[0], &ov[0])
    return out


def qconj4(a):
    cdef double[::1] av = np.ascontiguousarray(a, dtype=np.float64)
    out = np.empty(4)
    cdef double[::1] ov = out
    _qconj(&av[0], &ov[0])
    return out


# ---------------------------------------------------------------------------
# Hopf map

cdef inline void _hopf(const double *uv, double *out) noexcept nogil:
    cdef double vb[4]
    cdef double w[4]
    _qconj(uv + 4, vb)
    _qmul(uv, vb, w)
    out[0] = 2.0 * w[0]
    out[1] = 2.0 * w[1]
    out[2] = 2.0 * w[2]
    out[3] = 2.0 * w[3]
    out[4] = (
        uv[0] * uv[0] + uv[1] * uv[1] + uv[2] * uv[2] + uv[3] * uv[3]
        - uv[4] * uv[4] - uv[5] * uv[5] - uv[6] * uv[6] - uv[7] * uv[7]
    )


cdef void _hopf_jac(const double *uv, double *jac) noexcept nogil:
    # jac is row-major 5x8
    cdef const double *u = uv
    cdef const double *v = uv + 4
    # d(2 u conj(v))/du = 2 R(conj(v)); columns act on delta-u
    cdef double vb[4]
    _qconj(v, vb)
    # R(q) rows for p -> p q with q = vb
    jac[0 * 8 + 0] = 2 * vb[0]; jac[0 * 8 + 1] = -2 * vb[1]; jac[0 * 8 + 2] = -2 * vb[2]; jac[0 * 8 + 3] = -2 * vb[3]
    jac[1 * 8 + 0] = 2 * vb[1]; jac[1 * 8 + 1] = 2 * vb[0]; jac[1 * 8 + 2] = 2 * vb[3]; jac[1 * 8 + 3] = -2 * vb[2]
    jac[2 * 8 + 0] = 2 * vb[2]; jac[2 * 8 + 1] = -2 * vb[3]; jac[2 * 8 + 2] = 2 * vb[0]; jac[2 * 8 + 3] = 2 * vb[1]
    jac[3 * 8 + 0] = 2 * vb[3]; jac[3 * 8 + 1] = 2 * vb[2]; jac[3 * 8 + 2] = -2 * vb[1]; jac[3 * 8 + 3] = 2 * vb[0]
    # d(2 u conj(v))/dv = 2 L(u) C, C = diag(1,-1,-1,-1)
    jac[0 * 8 + 4] = 2 * u[0]; jac[0 * 8 + 5] = 2 * u[1]; jac[0 * 8 + 6] = 2 * u[2]; jac[0 * 8 + 7] = 2 * u[3]
    jac[1 * 8 + 4] = 2 * u[1]; jac[1 * 8 + 5] = -2 * u[0]; jac[1 * 8 + 6] = 2 * u[3]; jac[1 * 8 + 7] = -2 * u[2]
    jac[2 * 8 + 4] = 2 * u[2]; jac[2 * 8 + 5] = -2 * u[3]; jac[2 * 8 + 6] = -2 * u[0]; jac[2 * 8 + 7] = 2 * u[1]
    jac[3 * 8 + 4] = 2 * u[3]; jac[3 * 8 + 5] = 2 * u[2]; jac[3 * 8 + 6] = -2 * u[1]; jac[3 * 8 + 7] = -2 * u[0]
    # last row
    jac[4 * 8 + 0] = 2 * u[0]; jac[4 * 8 + 1] = 2 * u[1]; jac[4 * 8 + 2] = 2 * u[2]; jac[4 * 8 + 3] = 2 * u[3]
    jac[4 * 8 + 4] = -2 * v[0]; jac[4 * 8 + 5] = -2 * v[1]; jac[4 * 8 + 6] = -2 * v[2]; jac[4 * 8 + 7] = -2 * v[3]


def hopf5(uv):
    cdef double[::1] xv = np.ascontiguousarray(uv, dtype=np.float64)
    out = np.empty(5)
    cdef double[::1] ov = out
    _hopf(&xv[0], &ov[0])
    return out


def hopf5_batch(UV):
    cdef double[:, ::1] X = np.ascontiguousarray(UV, dtype=np.float64)
    cdef Py_ssize_t n = X.shape[0], i
    out = np.empty((n, 5))
    cdef double[:, ::1] O = out
    with nogil:
        for i in range(n):
            _hopf(&X[i, 0], &O[i, 0])
    return out


def hopf_jac(uv):
    cdef double[::1] xv = np.ascontiguousarray(uv, dtype=np.float64)
    out = np.empty((5, 8))
    cdef double[:, ::1] ov = out
    _hopf_jac(&xv[0], &ov[0, 0])
    return out


def hopf_jac_batch(UV):
    cdef double[:, ::1] X = np.ascontiguousarray(UV, dtype=np.float64)
    cdef Py_ssize_t n = X.shape[0], i
    out = np.empty((n, 5, 8))
    cdef double[:, :, ::1] O = out
    with nogil:
        for i in range(n):
            _hopf_jac(&X[i, 0], &O[i, 0, 0])
    return out


# ---------------------------------------------------------------------------
# fiber charts

def fiber_point(w, t, z, chart=1):
    cdef double[::1] wv = np.ascontiguousarray(w, dtype=np.float64)
    cdef double[::1] zv = np.ascontiguousarray(z, dtype=np.float64)
    cdef double tt = t
    cdef int ch = chart
    out = np.empty(8)
    cdef double[::1] ov = out
    cdef double s1, s2
    cdef double tmp[4]
    cdef double wb[4]
    cdef int i
    if ch == 1:
        s1 = 1.0 / sqrt(2.0 * (1.0 - tt))
        s2 = sqrt((1.0 - tt) / 2.0)
        _qmul(&wv[0], &zv[0], tmp)
        for i in range(4):
            ov[i] = s1 * tmp[i]
            ov[4 + i] = s2 * zv[i]
    else:
        s1 = 1.0 / sqrt(2.0 * (1.0 + tt))
        s2 = sqrt((1.0 + tt) / 2.0)
        _qconj(&wv[0], wb)
        _qmul(wb, &zv[0], tmp)
        for i in range(4):
            ov[i] = s2 * zv[i]
            ov[4 + i] = s1 * tmp[i]
    return out


def fiber_jac(w, t, z, chart=1):
    cdef double[::1] wv = np.ascontiguousarray(w, dtype=np.float64)
    cdef double[::1] zv = np.ascontiguousarray(z, dtype=np.float64)
    cdef double tt = t
    cdef int ch = chart
    out = np.zeros((8, 9))
    cdef double[:, ::1] J = out
    cdef double s1, s2
    cdef double wz[4]
    cdef double wb[4]
    cdef int i
    cdef double q0, q1, q2, q3
    if ch == 1:
        s1 = 1.0 / sqrt(2.0 * (1.0 - tt))
        s2 = sqrt((1.0 - tt) / 2.0)
        _qmul(&wv[0], &zv[0], wz)
        # du/dw = s1 R(z)
        q0 = zv[0]; q1 = zv[1]; q2 = zv[2]; q3 = zv[3]
        J[0, 0] = s1 * q0; J[0, 1] = -s1 * q1; J[0, 2] = -s1 * q2; J[0, 3] = -s1 * q3
        J[1, 0] = s1 * q1; J[1, 1] = s1 * q0; J[1, 2] = s1 * q3; J[1, 3] = -s1 * q2
        J[2, 0] = s1 * q2; J[2, 1] = -s1 * q3; J[2, 2] = s1 * q0; J[2, 3] = s1 * q1
        J[3, 0] = s1 * q3; J[3, 1] = s1 * q2; J[3, 2] = -s1 * q1; J[3, 3] = s1 * q0
        # du/dt = s1^3 wz ; dv/dt = -(s1/2) z
        for i in range(4):
            J[i, 4] = s1 * s1 * s1 * wz[i]
            J[4 + i, 4] = -(s1 / 2.0) * zv[i]
        # du/dz = s1 L(w)
        q0 = wv[0]; q1 = wv[1]; q2 = wv[2]; q3 = wv[3]
        J[0, 5] = s1 * q0; J[0, 6] = -s1 * q1; J[0, 7] = -s1 * q2; J[0, 8] = -s1 * q3
        J[1, 5] = s1 * q1; J[1, 6] = s1 * q0; J[1, 7] = -s1 * q3; J[1, 8] = s1 * q2
        J[2, 5] = s1 * q2; J[2, 6] = s1 * q3; J[2, 7] = s1 * q0; J[2, 8] = -s1 * q1
        J[3, 5] = s1 * q3; J[3, 6] = -s1 * q2; J[3, 7] = s1 * q1; J[3, 8] = s1 * q0
        # dv/dz = s2 I
        for i in range(4):
            J[4 + i, 5 + i] = s2
    else:
        s1 = 1.0 / sqrt(2.0 * (1.0 + tt))
        s2 = sqrt((1.0 + tt) / 2.0)
        _qconj(&wv[0], wb)
        _qmul(wb, &zv[0], wz)
        # du/dt = (s1/2) z ; dv/dt = -s1^3 conj(w) z
        for i in range(4):
            J[i, 4] = (s1 / 2.0) * zv[i]
            J[4 + i, 4] = -(s1 * s1 * s1) * wz[i]
        # du/dz = s2 I
        for i in range(4):
            J[i, 5 + i] = s2
        # dv/dw = s1 R(z) C  (v = conj(w) z, d/dw passes through the conjugation)
        q0 = zv[0]; q1 = zv[1]; q2 = zv[2]; q3 = zv[3]
        J[4, 0] = s1 * q0; J[4, 1] = s1 * q1; J[4, 2] = s1 * q2; J[4, 3] = s1 * q3
        J[5, 0] = s1 * q1; J[5, 1] = -s1 * q0; J[5, 2] = -s1 * q3; J[5, 3] = s1 * q2
        J[6, 0] = s1 * q2; J[6, 1] = s1 * q3; J[6, 2] = -s1 * q0; J[6, 3] = -s1 * q1
        J[7, 0] = s1 * q3; J[7, 1] = -s1 * q2; J[7, 2] = s1 * q1; J[7, 3] = -s1 * q0
        # dv/dz = s1 L(conj(w))
        q0 = wb[0]; q1 = wb[1]; q2 = wb[2]; q3 = wb[3]
        J[4, 5] = s1 * q0; J[4, 6] = -s1 * q1; J[4, 7] = -s1 * q2; J[4, 8] = -s1 * q3
        J[5, 5] = s1 * q1; J[5, 6] = s1 * q0; J[5, 7] = -s1 * q3; J[5, 8] = s1 * q2
        J[6, 5] = s1 * q2; J[6, 6] = s1 * q3; J[6, 7] = s1 * q0; J[6, 8] = -s1 * q1
        J[7, 5] = s1 * q3; J[7, 6] = -s1 * q2; J[7, 7] = s1 * q1; J[7, 8] = s1 * q0
    return out


# ---------------------------------------------------------------------------
# Möbius warp

cdef void _mobius_point(const double *x, const double *pole, double c, int n, double *out) noexcept nogil:
    cdef double xp = 0.0, n2 = 0.0, denom
    cdef int i
    cdef double y[8]
    for i in range(n):
        xp += x[i] * pole[i]
    denom = 1.0 - xp
    for i in range(n):
        y[i] = c * (x[i] - xp * pole[i]) / denom
        n2 += y[i] * y[i]
    for i in range(n):
        out[i] = ((n2 - 1.0) * pole[i] + 2.0 * y[i]) / (n2 + 1.0)


cdef void _mobius_jac(const double *x, const double *pole, double c, int n, double *jac) noexcept nogil:
    # jac row-major n x n; matches pure.mobius_jac
    cdef double xp = 0.0, n2 = 0.0, denom
    cdef int i, j, k
    cdef double y[8]
    cdef double cy[8]
    cdef double dsig[64]
    cdef double dinv[64]
    for i in range(n):
        xp += x[i] * pole[i]
    denom = 1.0 - xp
    for i in range(n):
        y[i] = (x[i] - xp * pole[i]) / denom
        cy[i] = c * y[i]
        n2 += cy[i] * cy[i]
    for i in range(n):
        for j in range(n):
            dsig[i * n + j] = ((1.0 if i == j else 0.0) - pole[i] * pole[j]) / denom \
                + (x[i] - xp * pole[i]) * pole[j] / (denom * denom)
    for i in range(n):
        for j in range(n):
            dinv[i * n + j] = (2.0 * pole[i] * cy[j] + (2.0 if i == j else 0.0)) / (n2 + 1.0) \
                - ((n2 - 1.0) * pole[i] + 2.0 * cy[i]) * 2.0 * cy[j] / ((n2 + 1.0) * (n2 + 1.0))
    for i in range(n):
        for j in range(n):
            jac[i * n + j] = 0.0
            for  k in range(n):
                jac[i * n + j] += dinv[i * n + k] * c * dsig[k * n + j]


def mobius_point(x, pole, c):
    cdef double[::1] xv = np.ascontiguousarray(x, dtype=np.float64)
    cdef double[::1] pv = np.ascontiguousarray(pole, dtype=np.float64)
    cdef int n = xv.shape[0]
    out = np.empty(n)
    cdef double[::1] ov = out
    _mobius_point(&xv[0], &pv[0], c, n, &ov[0])
    return out


def mobius_jac(x, pole, c):
    cdef double[::1] xv = np.ascontiguousarray(x, dtype=np.float64)
    cdef double[::1] pv = np.ascontiguousarray(pole, dtype=np.float64)
    cdef int n = xv.shape[0]
    out = np.empty((n, n))
    cdef double[:, ::1] ov = out
    _mobius_jac(&xv[0], &pv[0], c, n, &ov[0, 0])
    return out


def mobius_point_batch(X, pole, c):
    cdef double[:, ::1] Xv = np.ascontiguousarray(X, dtype=np.float64)
    cdef double[::1] pv = np.ascontiguousarray(pole, dtype=np.float64)
    cdef Py_ssize_t m = Xv.shape[0], i
    cdef int n = Xv.shape[1]
    out = np.empty((m, n))
    cdef double[:, ::1] O = out
    cdef double cc = c
    with nogil:
        for i in range(m):
            _mobius_point(&Xv[i, 0], &pv[0], cc, n, &O[i, 0])
    return out


def mobius_jac_batch(X, pole, c):
    cdef double[:, ::1] Xv = np.ascontiguousarray(X, dtype=np.float64)
    cdef double[::1] pv = np.ascontiguousarray(pole, dtype=np.float64)
    cdef Py_ssize_t m = Xv.shape[0], i
    cdef int n = Xv.shape[1]
    out = np.empty((m, n, n))
    cdef double[:, :, ::1] O = out
    cdef double cc = c
    with nogil:
        for i in range(m):
            _mobius_jac(&Xv[i, 0], &pv[0], cc, n, &O[i, 0, 0])
    return out


# ---------------------------------------------------------------------------
# Cartan cubic

cdef inline double _cartan_val(const double *x) noexcept nogil:
    cdef double a = x[4] / SQ3 + x[3]
    cdef double b = x[4] / SQ3 - x[3]
    cdef double d = -2.0 * x[4] / SQ3
    cdef double det = a * (b * d - x[2] * x[2]) - x[0] * (x[0] * d - x[2] * x[1]) \
        + x[1] * (x[0] * x[2] - b * x[1])
    return 1.5 * SQ3 * det


cdef void _cartan_grad(const double *x, double *g) noexcept nogil:
    cdef double s[9]
    cdef double s2[9]
    cdef int i, j, k
    s[0] = x[4] / SQ3 + x[3]; s[1] = x[0]; s[2] = x[1]
    s[3] = x[0]; s[4] = x[4] / SQ3 - x[3]; s[5] = x[2]
    s[6] = x[1]; s[7] = x[2]; s[8] = -2.0 * x[4] / SQ3
    for i in range(3):
        for j in range(3):
            s2[i * 3 + j] = 0.0
            for k in range(3):
                s2[i * 3 + j] += s[i * 3 + k] * s[k * 3 + j]
    g[0] = 3.0 * SQ3 * s2[1]
    g[1] = 3.0 * SQ3 * s2[2]
    g[2] = 3.0 * SQ3 * s2[5]
    g[3] = 3.0 * SQ3 * (s2[0] - s2[4]) / 2.0
    g[4] = 3.0 * SQ3 * (s2[0] + s2[4] - 2.0 * s2[8]) / (2.0 * SQ3)


def cartan_val(x):
    cdef double[::1] xv = np.ascontiguousarray(x, dtype=np.float64)
    return _cartan_val(&xv[0])


def cartan_grad(x):
    cdef double[::1] xv = np.ascontiguousarray(x, dtype=np.float64)
    out = np.empty(5)
    cdef double[::1] ov = out
    _cartan_grad(&xv[0], &ov[0])
    return out


def cartan_val_batch(X):
    cdef double[:, ::1] Xv = np.ascontiguousarray(X, dtype=np.float64)
    cdef Py_ssize_t m = Xv.shape[0], i
    out = np.empty(m)
    cdef double[::1] O = out
    with nogil:
        for i in range(m):
            O[i] = _cartan_val(&Xv[i, 0])
    return out


def cartan_grad_batch(X):
    cdef double[:, ::1] Xv = np.ascontiguousarray(X, dtype=np.float64)
    cdef Py_ssize_t m = Xv.shape[0], i
    out = np.empty((m, 5))
    cdef double[:, ::1] O = out
    with nogil:
        for i in range(m):
            _cartan_grad(&Xv[i, 0], &O[i, 0])
    return out


# ---------------------------------------------------------------------------
# composed level-set constraint

def mo_val_batch(X, base_kind, pval, invc, pole, lifted):
    cdef double[:, ::1] Xv = np.ascontiguousarray(X, dtype=np.float64)
    cdef double[::1] pv = np.ascontiguousarray(pole, dtype=np.float64)
    cdef Py_ssize_t m = Xv.shape[0], i
    cdef int kind = base_kind, lift = 1 if lifted else 0
    cdef double p = pval, cc = invc
    cdef int warped = 0 if cc == 1.0 else 1
    out = np.empty(m)
    cdef double[::1] O = out
    cdef double y[5]
    cdef double z[5]
    cdef double *zp
    with nogil:
        for i in range(m):
            if lift:
                _hopf(&Xv[i, 0], y)
            else:
                y[0] = Xv[i, 0]; y[1] = Xv[i, 1]; y[2] = Xv[i, 2]; y[3] = Xv[i, 3]; y[4] = Xv[i, 4]
            if warped:
                _mobius_point(y, &pv[0], cc, 5, z)
                zp = z
            else:
                zp = y
            if kind == 0:
                O[i] = zp[0] * zp[0] + zp[1] * zp[1] - p * p
            else:
                O[i] = _cartan_val(zp) - p
    return out


def mo_grad_batch(X, base_kind, pval, invc, pole, lifted):
    cdef double[:, ::1] Xv = np.ascontiguousarray(X, dtype=np.float64)
    cdef double[::1] pv = np.ascontiguousarray(pole, dtype=np.float64)
    cdef Py_ssize_t m = Xv.shape[0], i
    cdef int kind = base_kind, lift = 1 if lifted else 0
    cdef double p = pval, cc = invc
    cdef int warped = 0 if cc == 1.0 else 1
    cdef int dim = 8 if lift else 5
    out = np.empty((m, dim))
    cdef double[:, ::1] O = out
    cdef double y[5]
    cdef double z[5]
    cdef double g[5]
    cdef double g2[5]
    cdef double jm[25]
    cdef double jh[40]
    cdef double *zp
    cdef int a, b
    with nogil:
        for i in range(m):
            if lift:
                _hopf(&Xv[i, 0], y)
            else:
                y[0] = Xv[i, 0]; y[1] = Xv[i, 1]; y[2] = Xv[i, 2]; y[3] = Xv[i, 3]; y[4] = Xv[i, 4]
            if warped:
                _mobius_point(y, &pv[0], cc, 5, z)
                zp = z
            else:
                zp = y
            if kind == 0:
                g[0] = 2.0 * zp[0]; g[1] = 2.0 * zp[1]; g[2] = 0.0; g[3] = 0.0; g[4] = 0.0
            else:
                _cartan_grad(zp, g)
            if warped:
                _mobius_jac(y, &pv[0], cc, 5, jm)
                for b in range(5):
                    g2[b] = 0.0
                    for a in range(5):
                        g2[b] += g[a] * jm[a * 5 + b]
                for b in range(5):
                    g[b] = g2[b]
            if lift:
                _hopf_jac(&Xv[i, 0], jh)
                for b in range(8):
                    O[i, b] = 0.0
                    for a in range(5):
                        O[i, b] += g[a] * jh[a * 8 + b]
            else:
                for b in range(5):
                    O[i, b] = g[b]
    return out


def mo_guard_batch(X, invc, pole, lifted, margin=1e-6):
    cdef double[:, ::1] Xv = np.ascontiguousarray(X, dtype=np.float64)
    cdef double[::1] pv = np.ascontiguousarray(pole, dtype=np.float64)
    cdef Py_ssize_t m = Xv.shape[0], i
    cdef int lift = 1 if lifted else 0
    cdef double cc = invc, eps = margin
    out = np.empty(m, dtype=np.uint8)
    cdef unsigned char[::1] O = out
    cdef double y[5]
    cdef double dot
    cdef int j
    if cc == 1.0:
        out[:] = 1
        return out.astype(bool)
    with nogil:
        for i in range(m):
            if lift:
                _hopf(&Xv[i, 0], y)
            else:
                y[0] = Xv[i, 0]; y[1] = Xv[i, 1]; y[2] = Xv[i, 2]; y[3] = Xv[i, 3]; y[4] = Xv[i, 4]
            dot = 0.0
            for j in range(5):
                dot += y[j] * pv[j]
            O[i] = 1 if fabs(1.0 - dot) > eps else 0
    return out.astype(bool)


# ---------------------------------------------------------------------------
# Clifford-Stiefel constraint family


cdef _emats(E, int l):
    # (ne, l, l) C-contiguous float64; a 1-element dummy when the family is empty
    arr = np.asarray(E, dtype=np.float64)
    if arr.size == 0:
        return np.zeros((1, l, l))
    return np.ascontiguousarray(arr.reshape(-1, l, l))


def ptc_values(x, E, alpha, beta):
    cdef double[::1] xv = np.ascontiguousarray(x, dtype=np.float64)
    cdef int l = xv.shape[0] // 2
    cdef int ne = len(E)
    cdef double[:, :, ::1] Ev = _emats(E, l)
    out = np.empty(2 + ne)
    cdef double[::1] O = out
    cdef double al = alpha, be = beta
    _ptc_values(xv, Ev, l, ne, al, be, O)
    return out


cdef void _ptc_values(double[::1] xv, double[:, :, ::1] Ev, int l, int ne,
                      double al, double be, double[::1] O):
    cdef double uu = 0.0, vv = 0.0, uv = 0.0, acc
    cdef int i, j, k
    for i in range(l):
        uu += xv[i] * xv[i]
        vv += xv[l + i] * xv[l + i]
        uv += xv[i] * xv[l + i]
    O[0] = -be / (2.0 * al) * uu + al / (2.0 * be) * vv
    O[1] = -uv
    cdef double scale = 1.0 / (2.0 * al * be)
    for k in range(ne):
        acc = 0.0
        for i in range(l):
            for j in range(l):
                acc += Ev[k, i, j] * xv[j] * xv[l + i]
        O[2 + k] = scale * acc


def ptc_grads(x, E, alpha, beta):
    cdef double[::1] xv = np.ascontiguousarray(x, dtype=np.float64)
    cdef int l = xv.shape[0] // 2
    cdef int ne = len(E)
    cdef double[:, :, ::1] Ev = _emats(E, l)
    out = np.empty((2 + ne, 2 * l))
    cdef double[:, ::1] O = out
    cdef double al = alpha, be = beta
    _ptc_grads(xv, Ev, l, ne, al, be, O)
    return out


cdef void _ptc_grads(double[::1] xv, double[:, :, ::1] Ev, int l, int ne,
                     double al, double be, double[:, ::1] O):
    cdef int i, j, k
    cdef double acc
    cdef double scale = 1.0 / (2.0 * al * be)
    for i in range(l):
        O[0, i] = -be / al * xv[i]
        O[0, l + i] = al / be * xv[l + i]
        O[1, i] = -xv[l + i]
        O[1, l + i] = -xv[i]
    for k in range(ne):
        for i in range(l):
            # d/du_i: sum_j E[j,i] v_j  (E^T v);  d/dv_i: (E u)_i
            acc = 0.0
            for j in range(l):
                acc += Ev[k, j, i] * xv[l + j]
            O[2 + k, i] = scale * acc
            acc = 0.0
            for j in range(l):
                acc += Ev[k, i, j] * xv[j]
            O[2 + k, l + i] = scale * acc


def ptc_project(x0, E, alpha, beta, tol=1e-13, maxiter=50):
    x = np.array(x0, dtype=np.float64)
    cdef double[::1] xv = x
    cdef int l = xv.shape[0] // 2
    cdef int ne = len(E)
    cdef double[:, :, ::1] Ev = _emats(E, l)
    cdef int k = 3 + ne
    cdef int n = 2 * l
    cdef double al = alpha, be = beta, tl = tol
    cdef int mx = maxiter
    vals = np.empty(2 + ne)
    f = np.empty(k)
    jac = np.empty((k, n))
    cdef double[::1] Vv = vals
    cdef double[::1] Fv = f
    cdef double[:, ::1] Jv = jac
    best_x = x.copy()
    cdef double[::1] Bv = best_x
    cdef double best_r = -1.0
    cdef int best_it = 0
    cdef double resid, acc
    cdef int it, i, a, b
    cdef double gram[256]
    cdef double rhs[16]
    cdef double sol[16]
    if k > 16:
        raise ValueError("too many constraints for the compiled projector")
    for it in range(1, mx + 1):
        _ptc_values(xv, Ev, l, ne, al, be, Vv)
        acc = 0.0
        for i in range(n):
            acc += xv[i] * xv[i]
        Fv[0] = (acc - 1.0) / 2.0
        for i in range(2 + ne):
            Fv[1 + i] = Vv[i]
        resid = 0.0
        for i in range(k):
            if fabs(Fv[i]) > resid:
                resid = fabs(Fv[i])
        if best_r < 0.0 or resid < best_r:
            for i in range(n):
                Bv[i] = xv[i]
            best_r = resid
            best_it = it - 1
        if resid < tl:
            return x, resid, it - 1
        for i in range(n):
            Jv[0, i] = xv[i]
        _ptc_grads(xv, Ev, l, ne, al, be, Jv[1:, :])
        # gram = J J^T, solve gram sol = -F by Cholesky
        for a in range(k):
            for b in range(k):
                acc = 0.0
                for i in range(n):
                    acc += Jv[a, i] * Jv[b, i]
                gram[a * k + b] = acc
            rhs[a] = -Fv[a]
        if _chol_solve(gram, rhs, sol, k) != 0:
            break
        for i in range(n):
            acc = 0.0
            for a in range(k):
                acc += Jv[a, i] * sol[a]
            xv[i] = xv[i] + acc
    for i in range(n):
        xv[i] = Bv[i]
    return x, best_r, best_it


cdef int _chol_solve(double *a, double *b, double *x, int k) noexcept nogil:
    # solve (k x k SPD) a x = b in place via Cholesky; returns nonzero on failure
    cdef int i, j, m
    cdef double s
    for i in range(k):
        for j in range(i + 1):
            s = a[i * k + j]
            for m in range(j):
                s -= a[i * k + m] * a[j * k + m]
            if i == j:
                if s <= 0.0:
                    return 1
                a[i * k + i] = sqrt(s)
            else:
                a[i * k + j] = s / a[j * k + j]
    for i in range(k):
        s = b[i]
        for m in range(i):
            s -= a[i * k + m] * x[m]
        x[i] = s / a[i * k + i]
    for i in range(k - 1, -1, -1):
        s = x[i]
        for m in range(i + 1, k):
            s -= a[m * k + i] * x[m]
        x[i] = s / a[i * k + i]
    return 0
