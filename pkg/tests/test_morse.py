import numpy as np
import pytest

from dupin import hopfmo, morse
from dupin import _kern as kern
from dupin.errors import ArgumentError, UnreliableSearchError
from dupin.quat import Quaternion


def unit(v):
    return v / np.linalg.norm(v)


@pytest.fixture(scope="module")
def cyclide_meta():
    return hopfmo.cyclide(0.6).meta


@pytest.fixture(scope="module")
def warped_meta():
    surf = hopfmo.mobius_warp(1.5, hopfmo.DEFAULT_POLE, hopfmo.cyclide(0.6))
    return surf.meta


def test_sphere_height_critical_points(rng):
    man = morse.sphere_manifold(5)
    d = unit(rng.normal(size=5))
    cs = morse.height_critical_points(man, d, starts=60, seed=0)
    assert cs.count == 2
    assert np.allclose(cs.heights(), [-1.0, 1.0], atol=1e-10)
    assert cs.all_nondegenerate
    assert not cs.suspected_continuum


def test_direction_must_be_unit(rng):
    man = morse.sphere_manifold(5)
    with pytest.raises(ArgumentError):
        morse.height_critical_points(man, np.ones(5), starts=10, seed=0)


def test_cyclide_heights_closed_form(cyclide_meta, rng):
    # extrema of a linear height on the torus r S^1 x s S^2
    man = morse.mo_manifold(cyclide_meta)
    d = unit(rng.normal(size=5))
    cs = morse.height_critical_points(man, d, starts=150, seed=1)
    r, s = 0.6, 0.8
    a = r * np.hypot(d[0], d[1])
    b = s * np.linalg.norm(d[2:])
    expected = np.sort([a + b, a - b, -a + b, -a - b])
    assert cs.count == 4
    assert np.allclose(cs.heights(), expected, atol=1e-9)


def test_unreliable_search_raises(cyclide_meta, rng):
    man = morse.mo_manifold(cyclide_meta)
    d = unit(rng.normal(size=5))
    with pytest.raises(UnreliableSearchError):
        morse.height_critical_points(man, d, starts=40, seed=0, maxiter=2)


def test_lift_doubles_critical_count(warped_meta, rng):
    lift_man = morse.mo_manifold(warped_meta, lifted=True)
    d8 = unit(rng.normal(size=8))
    cs = morse.height_critical_points(lift_man, d8, starts=400, seed=3)
    assert cs.count == 8
    assert cs.all_nondegenerate


def test_fiber_critical_values_against_grid(rng):
    ab = unit(rng.normal(size=8))
    a, b = Quaternion.from_array(ab[:4]), Quaternion.from_array(ab[4:])
    p5 = unit(rng.normal(size=5))
    w, t = Quaternion.from_array(p5[:4]), float(p5[4])
    fc = morse.fiber_critical_values(a, b, w, t)
    assert not fc.degenerate
    gmax, gmin = morse.fiber_value_oracle(a, b, w, t, seed=0)
    assert fc.value_plus == pytest.approx(gmax, abs=1e-4)
    assert fc.value_minus == pytest.approx(gmin, abs=1e-4)
    # critical values are symmetric about zero
    assert fc.value_plus == pytest.approx(-fc.value_minus, abs=1e-12)


def test_fiber_height_square_identity(rng):
    for _ in range(10):
        ab = unit(rng.normal(size=8))
        a, b = Quaternion.from_array(ab[:4]), Quaternion.from_array(ab[4:])
        p5 = unit(rng.normal(size=5))
        w, t = Quaternion.from_array(p5[:4]), float(p5[4])
        if t > 0.9:
            continue
        fc = morse.fiber_critical_values(a, b, w, t)
        abar = np.concatenate([a.conj().as_array(), b.conj().as_array()])
        ell = float(kern.hopf5(abar) @ p5)
        assert fc.value_plus ** 2 == pytest.approx(0.5 + 0.5 * ell, abs=1e-12)


def test_fiber_charts_agree(rng):
    ab = unit(rng.normal(size=8))
    a, b = Quaternion.from_array(ab[:4]), Quaternion.from_array(ab[4:])
    p5 = unit(rng.normal(size=5))
    p5[4] = 0.1  # away from both chart poles
    p5 = unit(p5)
    w, t = Quaternion.from_array(p5[:4]), float(p5[4])
    f1 = morse.fiber_critical_values(a, b, w, t, chart=1)
    f2 = morse.fiber_critical_values(a, b, w, t, chart=-1)
    assert f1.value_plus == pytest.approx(f2.value_plus, abs=1e-12)


def test_fiber_degenerate_at_antipodal_base(rng):
    ab = unit(rng.normal(size=8))
    a, b = Quaternion.from_array(ab[:4]), Quaternion.from_array(ab[4:])
    abar = np.concatenate([a.conj().as_array(), b.conj().as_array()])
    p5 = -kern.hopf5(abar)
    fc = morse.fiber_critical_values(a, b, Quaternion.from_array(p5[:4]),
                                     float(p5[4]))
    assert fc.degenerate


def test_taut_doubling_small_run(cyclide_meta):
    rep = morse.taut_doubling_check(cyclide_meta, directions=3, seed=0,
                                    starts_base=150, starts_lift=400)
    assert rep.passed, (rep.failures, [d.reason for d in rep.directions])
    assert rep.common_counts() == (4, 8)
    for d in rep.directions:
        if not d.excluded:
            assert d.pairing_dev < 1e-6


def test_taut_report_lines(cyclide_meta):
    rep = morse.taut_doubling_check(cyclide_meta, directions=2, seed=4,
                                    starts_base=150, starts_lift=400)
    text = "\n".join(rep.lines())
    assert "2 directions" in text
