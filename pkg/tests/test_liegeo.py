import numpy as np
import pytest

from dupin import liegeo
from dupin.errors import ChartDomainError, DegenerateCrossRatioError


def unit(v):
    return v / np.linalg.norm(v)


def random_line(rng, n=6):
    f = unit(rng.normal(size=n + 1))
    xi = rng.normal(size=n + 1)
    xi = unit(xi - (xi @ f) * f)
    return liegeo.legendre_line(f, xi)


def test_metric_signature():
    g = liegeo.lie_metric(4)
    assert np.allclose(g, np.diag([-1, 1, 1, 1, 1, 1, -1]))


def test_sphere_to_lie_lands_on_quadric(rng):
    p = unit(rng.normal(size=5))
    assert liegeo.on_quadric(liegeo.sphere_to_lie(p, 0.7))
    assert liegeo.on_quadric(liegeo.sphere_to_lie(p, 0.0))


def test_oriented_contact_spherical_tangency(rng):
    """Spheres in S^n touch with matching orientation iff the center
    distance equals the difference of the signed radii."""
    p = unit(rng.normal(size=5))
    u = rng.normal(size=5)
    u = unit(u - (u @ p) * p)
    a = liegeo.sphere_to_lie(p, 0.7)
    q = np.cos(0.4) * p + np.sin(0.4) * u
    assert liegeo.oriented_contact(a, liegeo.sphere_to_lie(q, 0.3))
    q_far = np.cos(1.1) * p + np.sin(1.1) * u
    assert not liegeo.oriented_contact(a, liegeo.sphere_to_lie(q_far, 0.3))


def test_projparam_roundtrips():
    p = liegeo.ProjParam.from_curvature(2.0)
    assert p.kappa == pytest.approx(2.0)
    assert p.angle == pytest.approx(np.arctan(0.5))
    assert liegeo.ProjParam.infinite().is_infinite
    assert not p.is_infinite
    nrm = liegeo.ProjParam(3.0, 4.0).normalized()
    assert np.hypot(nrm.c, nrm.s) == pytest.approx(1.0)


def test_cross_ratio_sine_formula(rng):
    # for params (cos t, sin t) the cross ratio has a closed form in the
    # angle differences; checks orientation and ordering conventions at once
    t = np.sort(rng.uniform(0.1, 3.0, size=4))
    ps = [liegeo.ProjParam(np.cos(v), np.sin(v)) for v in t]
    s = np.sin
    expected = (s(t[0] - t[1]) * s(t[3] - t[2])) / (s(t[0] - t[2]) * s(t[3] - t[1]))
    assert liegeo.cross_ratio(*ps) == pytest.approx(expected, abs=1e-12)


def test_cross_ratio_handles_infinite_param():
    ps = [liegeo.ProjParam.from_curvature(k) for k in (-1.0, 0.0, 1.0)]
    val = liegeo.cross_ratio(ps[0], ps[1], ps[2], liegeo.ProjParam.infinite())
    # (a-b)(d-c)/((a-c)(d-b)) with d at infinity reduces to (a-b)/(a-c)
    assert val == pytest.approx((-1.0 - 0.0) / (-1.0 - 1.0))


def test_cross_ratio_degenerate_raises():
    p = liegeo.ProjParam.from_curvature(1.0)
    q = liegeo.ProjParam.from_curvature(2.0)
    with pytest.raises(DegenerateCrossRatioError):
        liegeo.cross_ratio(p, p, q, liegeo.ProjParam.from_curvature(3.0))


@pytest.mark.parametrize("n", [4, 6])
def test_generated_transforms_preserve_metric(rng, n):
    g = liegeo.lie_metric(n)
    for _ in range(5):
        b = liegeo.random_lie_transform(rng, n)
        assert np.allclose(b.T @ g @ b, g, atol=1e-11)
    t = liegeo.parallel_matrix(0.37, n)
    assert np.allclose(t.T @ g @ t, g, atol=1e-14)


def test_legendre_line_structure(rng):
    line = random_line(rng)
    for k in (line.k1, line.k2):
        assert liegeo.on_quadric(k)
    assert abs(liegeo.lie_inner(line.k1, line.k2)) < 1e-10
    # point sphere carries no radius component, great sphere no point weight
    assert line.k1.x[-1] == pytest.approx(0.0, abs=1e-14)
    assert line.k2.x[0] == pytest.approx(0.0, abs=1e-14)


def test_curvature_sphere_interpolates(rng):
    line = random_line(rng)
    k = liegeo.curvature_sphere(line, 0.6)
    expected = np.cos(0.6) * line.k1.x + np.sin(0.6) * line.k2.x
    assert np.allclose(k.x, expected)
    assert liegeo.on_quadric(k)


def test_reread_identity_gives_cot(rng):
    line = random_line(rng)
    th = np.array([0.4, 1.0, 1.8, 2.6])
    params = liegeo.reread_curvatures(np.eye(9), line, th)
    for p, t in zip(params, th):
        assert p.kappa == pytest.approx(1.0 / np.tan(t), abs=1e-12)


def test_reread_parallel_shifts_angles(rng):
    line = random_line(rng)
    th = np.array([0.4, 1.0, 1.8, 2.4])
    t = 0.3
    params = liegeo.reread_curvatures(liegeo.parallel_matrix(t, 6), line, th)
    for p, tt in zip(params, th):
        assert p.kappa == pytest.approx(1.0 / np.tan(tt + t), abs=1e-10)


def test_reread_random_transform_preserves_cross_ratio(rng):
    line = random_line(rng)
    th = np.array([0.3, 0.9, 1.7, 2.5])
    ref = liegeo.cross_ratio(*[liegeo.ProjParam(np.cos(t), np.sin(t)) for t in th])
    for _ in range(10):
        b = liegeo.random_lie_transform(rng, 6)
        try:
            params = liegeo.reread_curvatures(b, line, th)
        except ChartDomainError:
            continue
        assert liegeo.cross_ratio(*params) == pytest.approx(ref, abs=1e-8)
