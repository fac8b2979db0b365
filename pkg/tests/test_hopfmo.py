import numpy as np
import pytest

from dupin import engine, hopfmo
from dupin.errors import ArgumentError, ChartDomainError, DegenerateCrossRatioError
from dupin.numkit import jacobian_fd
from dupin.quat import Quaternion


def unit(v):
    return v / np.linalg.norm(v)


def test_cyclide_requires_valid_radius():
    for bad in (0.0, 1.0, -0.2, 1.7):
        with pytest.raises(ArgumentError):
            hopfmo.cyclide(bad)


def test_cyclide_spectrum(rng):
    surf = hopfmo.cyclide(0.6)
    res = engine.hyp_spectrum(surf.as_hyp(), surf.sample_fn(rng))
    assert res.spectrum.g == 2
    assert np.allclose(res.spectrum.values, [-0.8 / 0.6, 0.6 / 0.8], atol=1e-8)
    assert tuple(res.spectrum.multiplicities) == (1, 2)


def test_cyclide_chart_on_sphere(rng):
    surf = hopfmo.cyclide(0.4)
    for _ in range(5):
        q = surf.sample_fn(rng)
        x = surf.point(q)
        assert abs(x @ x - 1.0) < 1e-12
        assert abs(surf.normal(q) @ x) < 1e-12


def test_veronese_chart_consistency(rng):
    sub = hopfmo.veronese_submanifold(seed=1)
    q = rng.normal(size=2) * 0.3
    x = sub.point_fn(q)
    assert abs(x @ x - 1.0) < 1e-10
    assert np.allclose(sub.jacobian(q), jacobian_fd(sub.point_fn, q), atol=1e-7)


def test_cartan_tube_spectrum_and_level(rng):
    t = 0.4
    surf = hopfmo.cartan_tube(t=t, seed=0)
    res = engine.hyp_spectrum(surf.as_hyp(), surf.sample_fn(rng))
    assert res.spectrum.g == 3
    # cot(t + k pi/3) up to simultaneous orientation flip
    expected = np.sort([1 / np.tan(t + k * np.pi / 3) for k in range(3)])
    got = np.sort(res.spectrum.values)
    assert (np.allclose(got, expected, atol=1e-6)
            or np.allclose(np.sort(-got), expected, atol=1e-6))
    assert surf.meta["level"] == pytest.approx(np.cos(3 * t))


def test_cartan_tube_radius_range():
    with pytest.raises(ArgumentError):
        hopfmo.cartan_tube(t=np.pi / 3)
    with pytest.raises(ArgumentError):
        hopfmo.cartan_tube(t=0.0)


def test_mobius_warp_validation():
    surf = hopfmo.cyclide(0.6)
    with pytest.raises(ArgumentError):
        hopfmo.mobius_warp(0.0, hopfmo.DEFAULT_POLE, surf)
    with pytest.raises(ArgumentError):
        hopfmo.mobius_warp(1.5, np.array([2.0, 0, 0, 0, 0]), surf)
    assert hopfmo.mobius_warp(1.0, hopfmo.DEFAULT_POLE, surf) is surf


def test_mobius_warp_stays_on_sphere(rng):
    surf = hopfmo.mobius_warp(1.5, hopfmo.DEFAULT_POLE, hopfmo.cyclide(0.6))
    assert surf.meta["warp_c"] == pytest.approx(1.5)
    for _ in range(5):
        q = surf.sample_fn(rng)
        x = surf.point(q)
        nu = surf.normal(q)
        assert abs(x @ x - 1.0) < 1e-10
        assert abs(nu @ nu - 1.0) < 1e-10
        assert abs(nu @ x) < 1e-9
        # normal orthogonal to the warped tangent plane
        jac = surf.as_hyp().jacobian(q)
        assert np.max(np.abs(nu @ jac)) < 1e-8


def test_hopf_map_and_chart_inversion(rng):
    uv = unit(rng.normal(size=8))
    u = Quaternion.from_array(uv[:4])
    v = Quaternion.from_array(uv[4:])
    p5 = hopfmo.hopf(u, v)
    assert abs(p5 @ p5 - 1.0) < 1e-12
    w = Quaternion.from_array(p5[:4])
    t = p5[4]
    z = v * (1.0 / v.norm())
    u2, v2 = hopfmo.fiber_param(w, t, z, chart=1)
    assert np.allclose(u2.as_array(), uv[:4], atol=1e-10)
    assert np.allclose(v2.as_array(), uv[4:], atol=1e-10)


def test_fiber_param_rejects_chart_pole():
    z = Quaternion.from_array(np.array([1.0, 0, 0, 0]))
    w = Quaternion.from_array(np.zeros(4))
    with pytest.raises(ChartDomainError):
        hopfmo.fiber_param(w, 1.0, z, chart=1)


def test_lift_chart_geometry(rng):
    surf = hopfmo.mobius_warp(1.5, hopfmo.DEFAULT_POLE, hopfmo.cyclide(0.6))
    lifted = hopfmo.lift(surf, seed=0)
    assert lifted.nparams == 6 and lifted.ambient_dim == 8
    q = np.concatenate([surf.sample_fn(rng), rng.normal(size=3) * 0.2])
    x8 = lifted.point_fn(q)
    assert abs(x8 @ x8 - 1.0) < 1e-10
    # chart projects back to the base surface point
    u = Quaternion.from_array(x8[:4])
    v = Quaternion.from_array(x8[4:])
    base = surf.point(q[:3])
    assert np.allclose(hopfmo.hopf(u, v), base, atol=1e-9)
    jac = lifted.jacobian(q)
    assert np.linalg.matrix_rank(jac, tol=1e-8) == 6
    nu = np.asarray(lifted.normal_fn(q))
    assert abs(nu @ nu - 1.0) < 1e-10
    assert np.max(np.abs(nu @ jac)) < 1e-8
    # horizontal-lift normal agrees with the numerical complement route
    comp = hopfmo.lift_normal_complement(lifted, q)
    assert np.allclose(nu, comp, atol=1e-9)


@pytest.mark.parametrize("maker,g", [
    (lambda: hopfmo.mobius_warp(1.5, hopfmo.DEFAULT_POLE, hopfmo.cyclide(0.6)), 2),
    (lambda: hopfmo.mobius_warp(1.5, hopfmo.DEFAULT_POLE, hopfmo.cartan_tube(0.4)), 3),
])
def test_doubling_small_run(maker, g):
    surf = maker()
    rep = hopfmo.lifted_spectrum_check(surf, samples=5, seed=0)
    assert rep.passed, rep.failures
    assert rep.g_base == g
    assert rep.max_match_error < 1e-5
    for s in rep.samples:
        assert len(s.lift_values) == 2 * g
        assert s.mults_ok


def test_psi_mo_formula():
    assert hopfmo.psi_mo(1.0, 1.0 - np.pi / 2) == pytest.approx(2.0)
    assert hopfmo.psi_mo(0.9, 0.9) == pytest.approx(1.0)
    with pytest.raises(DegenerateCrossRatioError):
        hopfmo.psi_mo(0.5, 0.5 + np.pi)


def test_pairing_cross_ratio_matches_formula(rng):
    for _ in range(20):
        th, al = rng.uniform(0.1, np.pi - 0.1, size=2)
        if abs(np.cos(th - al) + 1.0) < 1e-6:
            continue
        got = hopfmo.pairing_cross_ratio(
            1 / np.tan(th / 2), 1 / np.tan((th + np.pi) / 2),
            1 / np.tan(al / 2), 1 / np.tan((al + np.pi) / 2))
        assert got == pytest.approx(hopfmo.psi_mo(th, al), abs=1e-8)


def test_unwarped_lift_psi_constant():
    surf = hopfmo.cyclide(0.6)
    scan = hopfmo.lift_psi_scan(surf, samples=10, seed=0)
    pv = scan.pairing_values()
    assert np.allclose(pv, 2.0, atol=1e-6)
    assert np.allclose(scan.ordered_values(), 0.5, atol=1e-6)
    assert scan.spread < 1e-6


def test_warped_lift_psi_varies():
    surf = hopfmo.mobius_warp(1.5, hopfmo.DEFAULT_POLE, hopfmo.cyclide(0.6))
    scan = hopfmo.lift_psi_scan(surf, samples=25, seed=0)
    assert scan.max_formula_dev < 1e-6
    assert scan.spread > 0.05
