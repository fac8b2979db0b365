import time

import numpy as np

from dupin import hopfmo, morse
from dupin.quat import Quaternion
from dupin import _kern as kern

rng = np.random.default_rng(11)

# --- round S^2: exactly the two poles
s2 = morse.sphere_manifold(3)
cs = morse.height_critical_points(s2, np.array([0.0, 0.0, 1.0]), starts=60, seed=1)
assert cs.count == 2, cs.count
assert np.allclose(np.sort(cs.heights()), [-1, 1], atol=1e-10)
assert cs.all_nondegenerate
print("round S^2: 2 critical points at heights -1, +1")

# --- unwarped cyclide: 4 critical points, heights from the product structure
r = 0.6
s = np.sqrt(1 - r * r)
cy = hopfmo.cyclide(r)
man = morse.mo_manifold(cy.meta)
for trial in range(3):
    dvec = rng.normal(size=5)
    dvec /= np.linalg.norm(dvec)
    cs = morse.height_critical_points(man, dvec, starts=200, seed=trial)
    expect = np.sort([sa * r * np.hypot(dvec[0], dvec[1])
                      + sb * s * np.linalg.norm(dvec[2:])
                      for sa in (-1, 1) for sb in (-1, 1)])
    assert cs.count == 4, (cs.count, cs.heights())
    dev = np.max(np.abs(np.sort(cs.heights()) - expect))
    assert dev < 1e-9, dev
print("unwarped cyclide: 4 critical points, heights match the product formula")

# --- warped cyclide: still 4 (diffeomorphism invariance)
cyw_meta = dict(cy.meta)
cyw_meta["warp_c"] = 1.5
manw = morse.mo_manifold(cyw_meta)
dvec = rng.normal(size=5)
dvec /= np.linalg.norm(dvec)
csw = morse.height_critical_points(manw, dvec, starts=200, seed=5)
print(f"warped cyclide: {csw.count} critical points")
assert csw.count == 4

# --- lift of warped cyclide: 8
liftman = morse.mo_manifold(cyw_meta, lifted=True)
d8 = rng.normal(size=8)
d8 /= np.linalg.norm(d8)
t0 = time.time()
csl = morse.height_critical_points(liftman, d8, starts=1000, seed=6)
t1 = time.time()
print(f"lift of warped cyclide: {csl.count} critical points "
      f"({csl.n_converged}/1000 converged, {t1 - t0:.2f}s)")
assert csl.count == 8

# --- fiber critical values vs grid oracle, and the g identity
for trial in range(5):
    ab = rng.normal(size=8)
    ab /= np.linalg.norm(ab)
    a, b = Quaternion.from_array(ab[:4]), Quaternion.from_array(ab[4:])
    base = rng.normal(size=5)
    base /= np.linalg.norm(base)
    w, t = Quaternion.from_array(base[:4]), base[4]
    if t > 0.9:
        continue
    fc = morse.fiber_critical_values(a, b, w, t)
    gmax, gmin = morse.fiber_value_oracle(a, b, w, t, seed=trial)
    assert abs(gmax - fc.value_plus) < 1e-4, (gmax, fc.value_plus)
    assert abs(gmin - fc.value_minus) < 1e-4
    # g identity: |alpha|^2 = 1/2 + l/2 with l the height of (w,t) in
    # direction h(conj a, conj b)
    abar = np.concatenate([a.conj().as_array(), b.conj().as_array()])
    ell = kern.hopf5(abar) @ base
    g_ab = fc.value_plus ** 2
    assert abs(g_ab - (0.5 + 0.5 * ell)) < 1e-12, abs(g_ab - (0.5 + 0.5 * ell))
    # chart -1 gives the same critical values where defined
    if abs(t) < 0.9:
        fc2 = morse.fiber_critical_values(a, b, w, t, chart=-1)
        assert abs(fc2.value_plus - fc.value_plus) < 1e-12
    # f at the optimizer equals the value (squared relation f^2 = g)
    u, v = hopfmo.fiber_param(w, t, Quaternion.from_array(fc.z_plus), chart=1)
    f_at = abar @ np.concatenate([u.as_array(), v.as_array()])
    assert abs(f_at - fc.value_plus) < 1e-10
    assert abs(f_at ** 2 - g_ab) < 1e-10
print("fiber critical values: grid oracle, g identity, chart agreement, f^2 = g")

# --- alpha = 0 exactly at (w,t) = -h(conj a, conj b)
ab = rng.normal(size=8)
ab /= np.linalg.norm(ab)
a, b = Quaternion.from_array(ab[:4]), Quaternion.from_array(ab[4:])
abar = np.concatenate([a.conj().as_array(), b.conj().as_array()])
bad = -kern.hopf5(abar)
fc = morse.fiber_critical_values(a, b, Quaternion.from_array(bad[:4]), bad[4])
assert fc.degenerate
print("alpha vanishes exactly at -h(conj a, conj b)")

# --- taut doubling: warped cyclide, small run
t0 = time.time()
rep = morse.taut_doubling_check(cyw_meta, directions=4, seed=3,
                                starts_base=200, starts_lift=1000)
t1 = time.time()
for line in rep.lines():
    print(line)
print(f"({t1 - t0:.1f}s for 4 directions)")
assert rep.passed, rep.failures
assert rep.common_counts() == (4, 8)

# --- cartan tube base: counts measured, constant across directions
ct_meta = hopfmo.cartan_tube(t=0.4).meta
t0 = time.time()
rep2 = morse.taut_doubling_check(ct_meta, directions=3, seed=4,
                                 starts_base=400, starts_lift=1600)
t1 = time.time()
for line in rep2.lines():
    print(line)
print(f"({t1 - t0:.1f}s for 3 directions)")
assert rep2.passed, rep2.failures
base_c, lift_c = rep2.common_counts()
print(f"cartan counts: ({base_c}, {lift_c})")

print("ALL MORSE CHECKS PASSED")
