import numpy as np
import pytest

from dupin import engine, otfkm, ptdeform
from dupin.errors import ArgumentError

A2 = 0.3


@pytest.fixture(scope="module")
def params():
    return ptdeform.PTParams.from_alpha2(A2)


def test_param_validation():
    with pytest.raises(ArgumentError):
        ptdeform.PTParams.from_alpha2(0.0)
    with pytest.raises(ArgumentError):
        ptdeform.PTParams.from_alpha2(1.2)
    # isoparametric value refused unless explicitly allowed
    with pytest.raises(ArgumentError):
        ptdeform.PTParams.from_alpha2(0.5)
    p = ptdeform.PTParams.from_alpha2(0.5, allow_isoparametric=True)
    assert p.alpha == pytest.approx(p.beta)
    with pytest.raises(ArgumentError):
        ptdeform.PTParams(0.6, 0.9)


def test_deform_lands_on_sphere_and_manifold(params, sys24):
    fp = otfkm.sample_v2(sys24, 0, 1)[0]
    y = ptdeform.deform(params, fp)
    assert abs(y @ y - 1.0) < 1e-12
    man = ptdeform.pt_manifold(params, sys24)
    assert man.residual(man.project(y)) < 1e-12


def test_spectrum_at_xi_closed_form(params, sys24):
    a, b = params.alpha, params.beta
    expected = np.array([-a / b, 0.0, b / a])
    for fp in otfkm.sample_v2(sys24, 5, 4):
        res = ptdeform.spectrum_at_xi(params, sys24, fp)
        assert np.allclose(res.spectrum.values, expected, atol=1e-6)
        assert tuple(res.spectrum.multiplicities) == (1, 2, 1)
        assert res.infinite_mult == 2


def test_psi_weights_at_distinguished_normal(params, sys24):
    for fp in otfkm.sample_v2(sys24, 7, 3):
        man = ptdeform.pt_manifold(params, sys24)
        x = man.project(ptdeform.deform(params, fp))
        xi = man.xi_field(x)
        psi_p = engine.lie_curvature(engine.principal_spectrum(man, x, xi))
        psi_m = engine.lie_curvature(engine.principal_spectrum(man, x, -xi))
        assert psi_p == pytest.approx(A2, abs=1e-5)
        assert psi_m == pytest.approx(1.0 - A2, abs=1e-5)


def test_psi_at_defaults_to_xi(params, sys24):
    fp = otfkm.sample_v2(sys24, 2, 1)[0]
    assert ptdeform.psi_at(params, sys24, fp) == pytest.approx(A2, abs=1e-5)


def test_psi_scan_covers_a_range(params, sys24):
    scan = ptdeform.psi_scan(params, sys24, samples=6, normals_per_sample=6,
                             seed=0)
    assert scan.min_psi == pytest.approx(A2, abs=1e-5)
    assert scan.max_psi == pytest.approx(1.0 - A2, abs=1e-5)
    assert scan.spread > 0.2
    assert scan.non_constant
    assert len(scan.values) >= 6 * 6


def test_special_tangents_are_eigendirections(params, sys24):
    """The three named tangents realize the closed-form curvatures."""
    fp = otfkm.sample_v2(sys24, 11, 1)[0]
    man = ptdeform.pt_manifold(params, sys24)
    x = man.project(ptdeform.deform(params, fp))
    xi = man.xi_field(x)
    a_mat, t_frame, _ = engine.shape_operator(man, x, xi)
    a, b = params.alpha, params.beta
    for w, kappa in zip(ptdeform.special_tangents(params, sys24, fp, 4),
                        (b / a, -a / b, 0.0)):
        c = t_frame @ w
        assert np.linalg.norm(c) == pytest.approx(1.0, abs=1e-9)
        assert np.allclose(a_mat @ c, kappa * c, atol=2e-5)
