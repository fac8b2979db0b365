import numpy as np

from dupin import hopfmo
from dupin.engine import hyp_spectrum
from dupin.quat import Quaternion
from dupin import _kern as kern

rng = np.random.default_rng(7)

# --- cyclide: pinned spectrum {-s/r (1), r/s (2)} constant across samples
r = 0.6
s = np.sqrt(1 - r * r)
cy = hopfmo.cyclide(r)
hyp = cy.as_hyp()
for _ in range(6):
    q = cy.sample_fn(rng)
    x = cy.point(q)
    nu = cy.normal(q)
    assert abs(x @ x - 1) < 1e-12 and abs(nu @ nu - 1) < 1e-12 and abs(x @ nu) < 1e-12
    res = hyp_spectrum(hyp, q)
    assert res.spectrum.g == 2, res.spectrum.values
    dev = np.max(np.abs(res.spectrum.values - np.array([-s / r, r / s])))
    assert dev < 1e-8, dev
    assert tuple(res.spectrum.multiplicities) == (1, 2)
print("cyclide spectrum pinned: {-s/r, r/s} mults (1,2), dev < 1e-8")

# --- veronese embedding: on sphere, antipodal, analytic jac matches FD
sub = hopfmo.veronese_submanifold(seed=0)
for _ in range(4):
    sq = sub.sample_fn(rng)
    jac = sub.jac_fn(sq)
    h = 1e-6
    fd = np.column_stack([
        (sub.point_fn(sq + h * e) - sub.point_fn(sq - h * e)) / (2 * h)
        for e in np.eye(2)
    ])
    assert np.max(np.abs(jac - fd)) < 1e-8, np.max(np.abs(jac - fd))
print("veronese chart jacobian matches FD")

# --- cartan tube: 3 distinct constant curvatures, mult 1 each
ct = hopfmo.cartan_tube(t=0.4, seed=0)
specs = []
for _ in range(5):
    q = ct.sample_fn(rng)
    res = hyp_spectrum(ct.as_hyp(), q)
    assert res.spectrum.g == 3, res.spectrum.values
    assert tuple(res.spectrum.multiplicities) == (1, 1, 1)
    specs.append(res.spectrum.values)
specs = np.array(specs)
spread = np.max(specs.max(axis=0) - specs.min(axis=0))
# isoparametric: cot(t), cot(t - pi/3), cot(t + pi/3) up to orientation
t = 0.4
expect = np.sort(1 / np.tan(np.array([t, t - np.pi / 3, t + np.pi / 3])))
expect_flip = np.sort(-expect)
d1 = np.max(np.abs(np.sort(specs[0]) - expect))
d2 = np.max(np.abs(np.sort(specs[0]) - expect_flip))
print(f"cartan tube: values {specs[0]}, cross-sample spread {spread:.2e}, "
      f"match cot(t+k pi/3): {min(d1, d2):.2e}")
assert spread < 1e-6 and min(d1, d2) < 1e-7

# F level check: cos(3t)
x5 = ct.point(ct.sample_fn(rng))
F = float(kern.cartan_val(x5))
print(f"cartan F(x) = {F:.12f} vs cos(3t) = {np.cos(3*t):.12f}")
assert abs(F - np.cos(3 * t)) < 1e-10

# --- mobius warp: points stay on sphere, normal orthogonal to tangents
cyw = hopfmo.mobius_warp(1.5, hopfmo.DEFAULT_POLE, cy)
for _ in range(4):
    q = cyw.sample_fn(rng)
    x = cyw.point(q)
    nu = cyw.normal(q)
    jac = cyw.jac_fn(q)
    assert abs(x @ x - 1) < 1e-12
    assert abs(nu @ nu - 1) < 1e-12
    assert np.max(np.abs(jac.T @ nu)) < 1e-10, np.max(np.abs(jac.T @ nu))
    assert np.max(np.abs(jac.T @ x)) < 1e-10
print("warped cyclide: on-sphere, conformal normal orthogonal to tangents")

# warped cyclide still g=2 but curvatures vary across samples
vals = []
for _ in range(8):
    q = cyw.sample_fn(rng)
    res = hyp_spectrum(cyw.as_hyp(), q, tol=1e-3)
    assert res.spectrum.g == 2, res.spectrum.values
    assert tuple(res.spectrum.multiplicities) == (1, 2)
    vals.append(res.spectrum.values)
vals = np.array(vals)
spread = vals.max(axis=0) - vals.min(axis=0)
print(f"warped cyclide curvature spread across samples: {spread}")
# pole e1 sits in the S^1 spine plane, so the mult-1 family keeps its
# focal distance; the mult-2 family must vary
assert spread[1] > 0.01
theta_alpha = [np.arctan2(1, v[0]) - np.arctan2(1, v[1]) for v in vals]
assert max(theta_alpha) - min(theta_alpha) > 0.01

# --- hopf + fiber_param round trips
for _ in range(6):
    uv = rng.normal(size=8)
    uv /= np.linalg.norm(uv)
    u, v = Quaternion.from_array(uv[:4]), Quaternion.from_array(uv[4:])
    base = hopfmo.hopf(u, v)
    assert abs(base @ base - 1) < 1e-12
    w, tt = Quaternion.from_array(base[:4]), base[4]
    if tt < 1 - 1e-2:
        z = (v * (1.0 / v.norm())) if v.norm() > 1e-8 else Quaternion.one()
        u2, v2 = hopfmo.fiber_param(w, tt, z, chart=1)
        uv2 = np.concatenate([u2.as_array(), v2.as_array()])
        base2 = kern.hopf5(uv2)
        assert np.max(np.abs(base2 - base)) < 1e-10
        assert np.max(np.abs(uv2 - uv)) < 1e-10, np.max(np.abs(uv2 - uv))
print("fiber_param chart +1 inverts hopf (z = v/|v|)")

# --- lift: rank 6 tangents, exact unit horizontal normal, h round trip
lifted = hopfmo.lift(cyw, seed=1)
print(f"lift chart sign: {lifted.chart_sign}")
for _ in range(4):
    q = np.concatenate([cyw.sample_fn(rng), rng.normal(size=3) * 0.3])
    x8 = lifted.point_fn(q)
    nu8 = lifted.normal_fn(q)
    assert abs(x8 @ x8 - 1) < 1e-12
    assert abs(nu8 @ nu8 - 1) < 1e-12, abs(nu8 @ nu8 - 1)
    base5 = kern.hopf5(x8)
    base_direct = cyw.point(q[:3])
    assert np.max(np.abs(base5 - base_direct)) < 1e-10
    jac = lifted.jacobian(q)
    sv = np.linalg.svd(jac, compute_uv=False)
    assert sv[5] > 1e-3 * sv[0], sv
    assert np.max(np.abs(jac.T @ nu8)) < 1e-9, np.max(np.abs(jac.T @ nu8))
    comp = hopfmo.lift_normal_complement(lifted, q)
    assert np.max(np.abs(comp - nu8)) < 1e-9
print("lift: h round trip, rank-6 jacobian, horizontal normal == complement normal")

# --- doubling: warped cyclide 4 values, warped cartan tube 6 values
rep = hopfmo.lifted_spectrum_check(cyw, samples=6, seed=2)
print(f"warped cyclide doubling: passed={rep.passed} max_err={rep.max_match_error:.3e}")
for line in rep.lines():
    print("  " + line)
assert rep.passed and rep.max_match_error < 1e-5
smp = rep.samples[0]
print(f"  base {smp.base_values} -> lift {smp.lift_values} mults {smp.lift_mults}")

ctw = hopfmo.mobius_warp(1.5, hopfmo.DEFAULT_POLE, ct)
rep2 = hopfmo.lifted_spectrum_check(ctw, samples=4, seed=3)
print(f"warped cartan doubling: passed={rep2.passed} max_err={rep2.max_match_error:.3e}")
assert rep2.passed and rep2.max_match_error < 1e-5
assert all(len(s.lift_values) == 6 for s in rep2.samples)

# --- psi scan: unwarped constant 2 / ordered 0.5; warped spread > 0.05
scan0 = hopfmo.lift_psi_scan(cy, samples=10, seed=4)
pv = scan0.pairing_values()
ov = scan0.ordered_values()
print(f"unwarped psi_mo: [{pv.min():.9f}, {pv.max():.9f}] ordered [{ov.min():.9f}, {ov.max():.9f}]")
assert np.max(np.abs(pv - 2.0)) < 1e-6
assert np.max(np.abs(ov - 0.5)) < 1e-6
assert scan0.max_formula_dev < 1e-6

scan1 = hopfmo.lift_psi_scan(cyw, samples=14, seed=5)
pv1 = scan1.pairing_values()
print(f"warped psi_mo: [{pv1.min():.6f}, {pv1.max():.6f}] spread {scan1.spread:.4f} "
      f"formula dev {scan1.max_formula_dev:.2e}")
assert scan1.spread > 0.05
assert scan1.max_formula_dev < 1e-6
assert not scan1.failures

print("ALL HOPFMO CHECKS PASSED")
