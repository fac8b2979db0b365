import numpy as np, time, warnings
from dupin import engine, clifford
from dupin.engine import (ConstraintManifold, CliffordStiefelManifold, PointBase,
                          ParametrizedHypersurface, tube, principal_spectrum,
                          lie_curvature, random_normal, hyp_spectrum, focal_rank_drop)

rng = np.random.default_rng(7)
t0 = time.time()

# 1. geodesic sphere about p in S^3, radius r: constraint x.p = cos r
n = 3
p = np.zeros(n + 1); p[0] = 1.0
r = 0.7
gs = ConstraintManifold(n + 1, lambda x: np.array([x @ p - np.cos(r)]),
                        lambda x: p[None, :], name="geodesic sphere")
x = gs.random_points(rng, 1)[0]
xi = gs.normal_frame(x)[0]
# orient toward center: xi.p > 0
if xi @ p < 0: xi = -xi
res = principal_spectrum(gs, x, xi)
print("geodesic sphere: vals", res.spectrum.values, "expect", 1/np.tan(r),
      "mults", res.spectrum.multiplicities, "inf", res.infinite_mult, "asym", res.asymmetry)
assert abs(res.spectrum.values[0] - 1/np.tan(r)) < 1e-6

# equator: r = pi/2
eq = ConstraintManifold(n + 1, lambda x: np.array([x @ p]), lambda x: p[None, :])
x = eq.random_points(rng, 1)[0]
res = principal_spectrum(eq, x, eq.normal_frame(x)[0])
print("equator: vals", res.spectrum.values, "max|.|", np.max(np.abs(res.spectrum.raw)))
assert np.max(np.abs(res.spectrum.raw)) < 1e-7

# tube over a point = geodesic sphere, parametric pipeline; the tube normal
# -sin t x + cos t xi points away from the center, so the uniform shift rule
# cot(theta - t) with theta = 0 gives -cot t here
tb = tube(PointBase(p), r)
charts = tb.sample_charts(rng, 2)
for ch in charts:
    hres = hyp_spectrum(ch, np.zeros(ch.nparams))
    print("point-tube: vals", hres.spectrum.values, "asym", hres.asymmetry)
    assert abs(hres.spectrum.values[0] + 1/np.tan(r)) < 1e-6
    assert hres.infinite_mult == 0

# parametric geodesic sphere with toward-center normal agrees with constraint
w0 = np.array([0., 1., 0., 0.]); w1 = np.array([0., 0., 1., 0.]); w2 = np.array([0., 0., 0., 1.])
W = np.vstack([w0, w1, w2])
def _sph_pt(q):
    g = np.array([1.0, *q]); g = g / np.linalg.norm(g)
    w = g[0] * w0 + g[1] * w1 + g[2] * w2
    # renormalize within span(W)
    w = w / np.linalg.norm(w)
    return np.cos(r) * p + np.sin(r) * w
def _sph_nu(q):
    x = _sph_pt(q)
    nu = (p - np.cos(r) * x)
    return nu / np.linalg.norm(nu)
par = ParametrizedHypersurface(_sph_pt, _sph_nu, 2, 4)
pres = hyp_spectrum(par, np.array([0.1, -0.2]))
print("parametric geodesic sphere (inward):", pres.spectrum.values)
assert abs(pres.spectrum.values[0] - 1/np.tan(r)) < 1e-6
print("pipeline agreement ok (both cot r within 1e-6)")

# 2. V2(C1): m=2, l=4
sys24 = clifford.build_system(2, 4)
v2 = CliffordStiefelManifold(sys24)
print("v2 dim", v2.dim, "codim", v2.codim_sphere)  # expect 2l-2-m = 4, m+1 = 3
pts = v2.random_points(rng, 3)
for x in pts:
    v2.check_sample(x, 1e-10)
    nu = random_normal(v2, x, rng)
    res = principal_spectrum(v2, x, nu)
    psi = lie_curvature(res)
    print("V2(2,4): vals", np.round(res.spectrum.values, 10), "mults", res.spectrum.multiplicities,
          "inf", res.infinite_mult, "psi", psi, "asym %.2e" % res.asymmetry)
    assert np.allclose(res.spectrum.values, [-1, 0, 1], atol=1e-6)
    assert tuple(res.spectrum.multiplicities) == (1, 2, 1)
    assert res.infinite_mult == 2
    assert abs(psi - 0.5) < 1e-6
    # normal flip antisymmetry
    res2 = principal_spectrum(v2, x, -nu)
    assert np.allclose(res2.spectrum.raw, -res.spectrum.raw[::-1], atol=1e-8)

# xi/eta in normal space
x = pts[0]
nfr = v2.normal_frame(x)
xi = v2.xi_field(x)
eta = np.concatenate([-x[4:], -x[:4]])
for vec, nm in ((xi, "xi"), (eta, "eta")):
    resid = np.linalg.norm(vec - nfr.T @ (nfr @ vec))
    print(nm, "normal-space residual", resid)
    assert resid < 1e-8

# 3. tube over V2 at t=pi/8
t = np.pi / 8
tv = tube(v2, t, rng=np.random.default_rng(3))
exp_vals = sorted([1/np.tan(3*np.pi/4 - t), 1/np.tan(np.pi/2 - t), 1/np.tan(np.pi/4 - t), -1/np.tan(t)])
print("expected tube vals", exp_vals)
charts = tv.sample_charts(rng, 3)
for ch in charts:
    hres = hyp_spectrum(ch, np.zeros(ch.nparams))
    psi = lie_curvature(hres)
    print("tube V2: vals", np.round(hres.spectrum.values, 8), "mults", hres.spectrum.multiplicities,
          "psi", psi, "asym %.1e" % hres.asymmetry)
    assert hres.spectrum.g == 4
    assert np.allclose(hres.spectrum.values, exp_vals, atol=1e-6)
    assert abs(psi - 0.5) < 1e-6

# focal rank drop at t = pi/4 (kappa=1, mult l-m-1 = 1)
with warnings.catch_warnings():
    warnings.simplefilter("ignore")
    tf = tube(v2, np.pi/4, rng=np.random.default_rng(3))
    ch = tf.sample_charts(np.random.default_rng(5), 1)[0]
    drop = focal_rank_drop(tf, ch)
    print("focal rank drop at t=pi/4:", drop, "expect", 4 - 2 - 1)
    tf2 = tube(v2, np.pi/2, rng=np.random.default_rng(3))   # kappa=0, mult m=2
    ch2 = tf2.sample_charts(np.random.default_rng(5), 1)[0]
    drop2 = focal_rank_drop(tf2, ch2)
    print("focal rank drop at t=pi/2:", drop2, "expect 2")

print("elapsed %.2fs" % (time.time() - t0))
print("ENGINE CORE OK")
