import numpy as np, time
from dupin import clifford, otfkm, ptdeform
from dupin.engine import principal_spectrum, lie_curvature, shape_operator, tube, hyp_spectrum

t0 = time.time()
sys24 = clifford.build_system(2, 4)

# otfkm certify (2,4) and (3,8)
rep = otfkm.v2_spectrum_certify(sys24, samples=5, normals_per_sample=4, seed=1)
print("\n".join(rep.lines()))
assert rep.passed

sys38 = clifford.build_system(3, 8)
rep38 = otfkm.v2_spectrum_certify(sys38, samples=3, normals_per_sample=3, seed=1)
print("\n".join(rep38.lines()))
assert rep38.passed
print("certify elapsed %.2fs" % (time.time() - t0))

# PT at alpha^2 = 0.3
p = ptdeform.PTParams.from_alpha2(0.3)
fps = otfkm.sample_v2(sys24, 5, 3)
exp = np.array([-np.sqrt(3/7), 0.0, np.sqrt(7/3)])
for fp in fps:
    res = ptdeform.spectrum_at_xi(p, sys24, fp)
    print("PT xi spectrum:", np.round(res.spectrum.values, 9), "mults", res.spectrum.multiplicities,
          "inf", res.infinite_mult)
    assert np.allclose(res.spectrum.values, exp, atol=1e-6), res.spectrum.values
    psi = lie_curvature(res)
    assert abs(psi - 0.3) < 1e-6, psi
    # -xi
    man = ptdeform.pt_manifold(p, sys24)
    x = man.project(ptdeform.deform(p, fp))
    psim = ptdeform.psi_at(p, sys24, fp, -man.xi_field(x))
    print("psi(xi) = %.9f  psi(-xi) = %.9f" % (psi, psim))
    assert abs(psim - 0.7) < 1e-6

# eigenvector checks
fp = fps[0]
man = ptdeform.pt_manifold(p, sys24)
x = man.project(ptdeform.deform(p, fp))
xi = man.xi_field(x)
A, T, asym = shape_operator(man, x, xi)
X, Y, Z = ptdeform.special_tangents(p, sys24, fp, 3)
for w, lam, nm in ((X, p.beta/p.alpha, "X"), (Y, -p.alpha/p.beta, "Y"), (Z, 0.0, "Z")):
    coeff = T @ w
    tangency = np.linalg.norm(w - T.T @ coeff)
    resid = np.linalg.norm(A @ coeff - lam * coeff)
    print(f"{nm}: tangency {tangency:.2e} eigen-residual {resid:.2e} (lam {lam:+.6f})")
    assert tangency < 1e-8 and resid < 1e-6

# psi scan
scan = ptdeform.psi_scan(p, sys24, samples=5, normals_per_sample=8, seed=2)
print("psi scan: min %.6f max %.6f spread %.6f skipped %d" %
      (scan.min_psi, scan.max_psi, scan.spread, scan.skipped))
assert scan.min_psi <= 0.3 + 1e-4 and scan.max_psi >= 0.7 - 1e-4
assert scan.non_constant
assert scan.min_psi > 0.0 and scan.max_psi < 1.0
assert scan.spread > 0.2

# isoparametric contrast
piso = ptdeform.PTParams(1/np.sqrt(2), 1/np.sqrt(2), allow_isoparametric=True)
fiso = otfkm.sample_v2(sys24, 9, 1)[0]
riso = ptdeform.spectrum_at_xi(piso, sys24, fiso)
print("iso contrast psi:", lie_curvature(riso))
assert abs(lie_curvature(riso) - 0.5) < 1e-6

# tube over PT at small t: 4 distinct curvatures at every sample
tb = tube(ptdeform.pt_manifold(p, sys24), 0.05, rng=np.random.default_rng(0))
psis = []
for ch in tb.sample_charts(np.random.default_rng(4), 4):
    hres = hyp_spectrum(ch, np.zeros(ch.nparams))
    psis.append(lie_curvature(hres))
    print("PT-tube: g =", hres.spectrum.g, "vals", np.round(hres.spectrum.values, 5), "psi %.6f" % psis[-1])
    assert hres.spectrum.g == 4
print("PT-tube psi spread: %.6f" % (max(psis) - min(psis)))
print("elapsed %.2fs" % (time.time() - t0))
print("PT OK")
