import warnings

import numpy as np
import pytest

from dupin import engine
from dupin.errors import ArgumentError, ConvergenceError, FocalRadiusWarning
from dupin.otfkm import v2_manifold

COT = lambda t: 1.0 / np.tan(t)


@pytest.fixture(scope="module")
def v2():
    from dupin.clifford import build_system
    return v2_manifold(build_system(2, 4))


def test_point_base_requires_unit():
    with pytest.raises(ArgumentError):
        engine.PointBase(np.array([0.0, 0.0, 2.0]))


def test_geodesic_sphere_spectrum(rng):
    # tube over a point: one curvature -cot(t) with full multiplicity
    tb = engine.tube(engine.PointBase(np.array([0.0, 0, 0, 1.0])), 0.6, rng=rng)
    ch = tb.sample_charts(rng, 1)[0]
    res = engine.hyp_spectrum(ch, np.zeros(ch.nparams))
    assert res.spectrum.g == 1
    assert res.spectrum.values[0] == pytest.approx(-COT(0.6), abs=1e-8)
    assert res.spectrum.multiplicities[0] == 2


def test_project_reaches_constraint_set(v2, rng):
    x = v2.project(rng.normal(size=8))
    assert v2.residual(x) < 1e-12
    v2.check_sample(x)


def test_check_sample_rejects_off_manifold(v2, rng):
    with pytest.raises(ConvergenceError):
        v2.check_sample(rng.normal(size=8))


def test_tangent_normal_split_orthonormal(v2, rng):
    x = v2.random_points(rng, 1)[0]
    t_frame, n_frame = v2.tangent_normal_split(x)
    assert t_frame.shape == (v2.dim, 8)
    assert n_frame.shape == (v2.codim_sphere, 8)
    frame = np.vstack([x[None, :], t_frame, n_frame])
    assert np.allclose(frame @ frame.T, np.eye(8), atol=1e-10)


def test_random_normal_unit_and_orthogonal(v2, rng):
    x = v2.random_points(rng, 1)[0]
    nu = engine.random_normal(v2, x, rng)
    assert np.isclose(nu @ nu, 1.0)
    assert abs(nu @ x) < 1e-10
    t_frame, _ = v2.tangent_normal_split(x)
    assert np.max(np.abs(t_frame @ nu)) < 1e-9


def test_v2_spectrum_and_psi(v2, rng):
    x = v2.random_points(rng, 1)[0]
    res = engine.principal_spectrum(v2, x, engine.random_normal(v2, x, rng))
    assert np.allclose(res.spectrum.values, [-1.0, 0.0, 1.0], atol=1e-6)
    assert tuple(res.spectrum.multiplicities) == (1, 2, 1)
    assert res.infinite_mult == 2
    assert engine.lie_curvature(res) == pytest.approx(0.5, abs=1e-6)


def test_normal_flip_negates_spectrum(v2, rng):
    x = v2.random_points(rng, 1)[0]
    nu = engine.random_normal(v2, x, rng)
    a = engine.principal_spectrum(v2, x, nu).spectrum.values
    b = engine.principal_spectrum(v2, x, -nu).spectrum.values
    assert np.allclose(a, -b[::-1], atol=1e-8)


def test_tube_over_v2_curvatures(v2, rng):
    t = np.pi / 8
    tb = engine.tube(v2, t, rng=rng)
    ch = tb.sample_charts(rng, 1)[0]
    res = engine.hyp_spectrum(ch, np.zeros(ch.nparams))
    expected = np.sort([COT(3 * np.pi / 4 - t), COT(np.pi / 2 - t),
                        COT(np.pi / 4 - t), -COT(t)])
    assert res.spectrum.g == 4
    assert np.allclose(res.spectrum.values, expected, atol=1e-6)
    assert engine.lie_curvature(res) == pytest.approx(0.5, abs=1e-6)
    mults = np.sort(res.spectrum.multiplicities)
    assert mults[0] == mults[1] and mults[2] == mults[3]


def test_parallel_hypersurface_shifts_angles(v2, rng):
    t = np.pi / 8
    ch = engine.tube(v2, t, rng=rng).sample_charts(rng, 1)[0]
    s = 0.1
    par = engine.tube(ch, s)
    res = engine.hyp_spectrum(par, np.zeros(par.nparams))
    expected = np.sort([COT(3 * np.pi / 4 - t - s), COT(np.pi / 2 - t - s),
                        COT(np.pi / 4 - t - s), COT(np.pi - t - s)])
    assert np.allclose(res.spectrum.values, expected, atol=1e-5)


def test_focal_radius_warning(v2, rng):
    with pytest.warns(FocalRadiusWarning):
        engine.tube(v2, np.pi / 4 + 5e-4, rng=rng)


def test_focal_rank_drop_matches_multiplicity(v2, rng):
    # the focal map at t = arccot(kappa) collapses exactly the
    # kappa-eigenspace of the base shape operator
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", FocalRadiusWarning)
        for t, drop in [(np.pi / 4, 1), (np.pi / 2, 2), (3 * np.pi / 4, 1)]:
            tb = engine.Tube(v2, t, rng=rng)
            ch = tb.sample_charts(rng, 1)[0]
            assert engine.focal_rank_drop(tb, ch) == drop


def test_nonfocal_tube_has_full_rank(v2, rng):
    tb = engine.tube(v2, np.pi / 8, rng=rng)
    ch = tb.sample_charts(rng, 1)[0]
    assert engine.focal_rank_drop(tb, ch) == 0


def test_hyp_spectrum_rejects_bad_normal_field():
    # chart of S^2 inside S^2 (a degenerate "hypersurface") would need a
    # normal inside the sphere; a constant ambient vector is not one
    hyp = engine.ParametrizedHypersurface(
        point_fn=lambda q: np.array([np.cos(q[0]) * np.cos(q[1]),
                                     np.cos(q[0]) * np.sin(q[1]),
                                     np.sin(q[0])]),
        normal_fn=lambda q: np.array([1.0, 0.0, 0.0]),
        nparams=2, ambient_dim=3)
    with pytest.raises(ArgumentError):
        engine.hyp_spectrum(hyp, np.array([0.3, 0.2]))
