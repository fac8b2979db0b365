"""Property suites: invariants checked over randomized draws.

Strategies draw an integer seed and feed a numpy generator, so hypothesis
shrinking replays failures exactly.
"""

import dataclasses
import warnings

import numpy as np
import pytest
from hypothesis import assume, given, settings, strategies as st

from dupin import clifford, engine, hopfmo, liegeo, otfkm
from dupin.errors import FocalRadiusWarning
from dupin.liegeo import ProjParam

SEEDS = st.integers(min_value=0, max_value=2**31 - 1)

V2 = otfkm.v2_manifold(clifford.build_system(2, 4))


@settings(max_examples=15, deadline=None)
@given(SEEDS)
def test_normal_flip_negates_spectrum_on_v2(seed):
    rng = np.random.default_rng(seed)
    x = V2.random_points(rng, 1)[0]
    nu = engine.random_normal(V2, x, rng)
    a = engine.principal_spectrum(V2, x, nu).spectrum
    b = engine.principal_spectrum(V2, x, -nu).spectrum
    assert np.all(np.asarray(a.multiplicities) == np.asarray(b.multiplicities)[::-1])
    assert np.allclose(np.asarray(a.values),
                       -np.asarray(b.values)[::-1], atol=1e-8)


@settings(max_examples=15, deadline=None)
@given(SEEDS, st.floats(min_value=0.35, max_value=0.8))
def test_normal_flip_negates_spectrum_on_chart(seed, r):
    # the cyclide spectrum {-s/r, r/s} is not symmetric about zero, so the
    # flip has to move both values, not just permute them
    rng = np.random.default_rng(seed)
    hyp = hopfmo.cyclide(r).as_hyp()
    q = rng.uniform(0.3, 1.2, size=hyp.nparams)
    flipped = dataclasses.replace(hyp, normal_fn=lambda p: -hyp.normal_fn(p))
    a = engine.hyp_spectrum(hyp, q).spectrum
    b = engine.hyp_spectrum(flipped, q).spectrum
    assert np.all(np.asarray(a.multiplicities) == np.asarray(b.multiplicities)[::-1])
    assert np.allclose(np.asarray(a.values),
                       -np.asarray(b.values)[::-1], atol=1e-8)


@settings(max_examples=30, deadline=None)
@given(SEEDS)
def test_generated_transform_preserves_quadric(seed):
    rng = np.random.default_rng(seed)
    n = 6
    b = liegeo.random_lie_transform(rng, n)
    g = liegeo.lie_metric(n)
    assert np.allclose(b.T @ g @ b, g, atol=1e-8)
    for _ in range(5):
        p = rng.normal(size=n + 1)
        p /= np.linalg.norm(p)
        x = liegeo.sphere_to_lie(p, rng.uniform(-1.2, 1.2)).x
        y = b @ x
        assert abs(liegeo.lie_inner(y, y)) <= 1e-8 * (y @ y)


@st.composite
def param_quads(draw, with_infinite=False):
    rng = np.random.default_rng(draw(SEEDS))
    th = np.sort(rng.uniform(0.12, np.pi - 0.12, size=4))
    assume(np.min(np.diff(th)) > 0.08)
    quad = [ProjParam(np.cos(t), np.sin(t)) for t in th]
    if with_infinite:
        # (1 : 0) sits at angle 0, clear of the finite three
        quad[3] = ProjParam.infinite()
    mat = rng.uniform(-2.0, 2.0, size=(2, 2))
    assume(abs(np.linalg.det(mat)) > 0.2)
    lams = rng.uniform(0.2, 3.0, size=4) * rng.choice([-1.0, 1.0], size=4)
    return quad, mat, lams


def _reparam(p, mat, lam):
    v = lam * (mat @ np.array([p.c, p.s]))
    return ProjParam(v[0], v[1])


@settings(max_examples=60, deadline=None)
@given(param_quads())
def test_cross_ratio_survives_reparametrization(case):
    quad, mat, lams = case
    before = liegeo.cross_ratio(*quad)
    after = liegeo.cross_ratio(*[_reparam(p, mat, lam)
                                 for p, lam in zip(quad, lams)])
    assert abs(after - before) <= 1e-10 * max(1.0, abs(before))


@settings(max_examples=60, deadline=None)
@given(param_quads(with_infinite=True))
def test_cross_ratio_reparametrization_with_infinite_entry(case):
    quad, mat, lams = case
    before = liegeo.cross_ratio(*quad)
    after = liegeo.cross_ratio(*[_reparam(p, mat, lam)
                                 for p, lam in zip(quad, lams)])
    assert abs(after - before) <= 1e-10 * max(1.0, abs(before))


@pytest.mark.parametrize("m,l", [(2, 4), (3, 8)])
@pytest.mark.parametrize("kappa", [-1.0, 0.0, 1.0])
def test_focal_rank_drop_equals_multiplicity(m, l, kappa):
    man = otfkm.v2_manifold(clifford.build_system(m, l))
    t = np.arctan2(1.0, kappa)
    rng = np.random.default_rng(5)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", FocalRadiusWarning)
        tb = engine.Tube(man, t, rng=rng)
        ch = tb.sample_charts(rng, 1)[0]
    expected = m if kappa == 0.0 else l - m - 1
    assert engine.focal_rank_drop(tb, ch) == expected
