"""Fast (compiled) and pure backends must agree to the last few ulps.

Skipped entirely when the compiled extension is unavailable."""

import numpy as np
import pytest

from dupin._kern import pure

fast = pytest.importorskip("dupin._kern._fast")

POLE = np.array([1.0, 0, 0, 0, 0])


def unit_rows(rng, n, d):
    x = rng.normal(size=(n, d))
    return x / np.linalg.norm(x, axis=1, keepdims=True)


def test_backend_tags():
    assert pure.BACKEND == "pure"
    assert fast.BACKEND == "fast"


def test_quaternion_kernels(rng):
    a, b = rng.normal(size=4), rng.normal(size=4)
    assert np.allclose(fast.qmul4(a, b), pure.qmul4(a, b), atol=1e-15)
    assert np.allclose(fast.qconj4(a), pure.qconj4(a), atol=0)


def test_hopf_kernels(rng):
    uv = unit_rows(rng, 16, 8)
    assert np.allclose(fast.hopf5_batch(uv), pure.hopf5_batch(uv), atol=1e-14)
    for row in uv[:4]:
        assert np.allclose(fast.hopf5(row), pure.hopf5(row), atol=1e-14)
        assert np.allclose(fast.hopf_jac(row), pure.hopf_jac(row), atol=1e-14)
    assert np.allclose(fast.hopf_jac_batch(uv), pure.hopf_jac_batch(uv),
                       atol=1e-14)


@pytest.mark.parametrize("chart", [1, -1])
def test_fiber_kernels(rng, chart):
    w = unit_rows(rng, 1, 4)[0]
    z = unit_rows(rng, 1, 4)[0]
    t = 0.3
    assert np.allclose(fast.fiber_point(w, t, z, chart),
                       pure.fiber_point(w, t, z, chart), atol=1e-15)
    assert np.allclose(fast.fiber_jac(w, t, z, chart),
                       pure.fiber_jac(w, t, z, chart), atol=1e-14)


def test_mobius_kernels(rng):
    x = unit_rows(rng, 12, 5)
    x = x[np.abs(1.0 - x @ POLE) > 1e-2]
    c = 1.7
    assert np.allclose(fast.mobius_point_batch(x, POLE, c),
                       pure.mobius_point_batch(x, POLE, c), atol=1e-13)
    assert np.allclose(fast.mobius_jac_batch(x, POLE, c),
                       pure.mobius_jac_batch(x, POLE, c), atol=1e-12)
    assert np.allclose(fast.mobius_point(x[0], POLE, c),
                       pure.mobius_point(x[0], POLE, c), atol=1e-13)
    assert np.allclose(fast.mobius_jac(x[0], POLE, c),
                       pure.mobius_jac(x[0], POLE, c), atol=1e-12)


def test_cartan_kernels(rng):
    x = unit_rows(rng, 10, 5)
    assert np.allclose(fast.cartan_val_batch(x), pure.cartan_val_batch(x),
                       atol=1e-13)
    assert np.allclose(fast.cartan_grad_batch(x), pure.cartan_grad_batch(x),
                       atol=1e-13)
    assert np.isclose(fast.cartan_val(x[0]), pure.cartan_val(x[0]), atol=1e-14)
    assert np.allclose(fast.cartan_grad(x[0]), pure.cartan_grad(x[0]),
                       atol=1e-14)


@pytest.mark.parametrize("base_kind,pval", [(0, 0.6), (1, np.cos(1.2))])
@pytest.mark.parametrize("lifted", [False, True])
def test_mo_kernels(rng, base_kind, pval, lifted):
    d = 8 if lifted else 5
    x = unit_rows(rng, 20, d) * rng.uniform(0.6, 1.4, size=(20, 1))
    invc = 1.0 / 1.5
    args = (x, base_kind, pval, invc, POLE, lifted)
    assert np.allclose(fast.mo_val_batch(*args), pure.mo_val_batch(*args),
                       atol=1e-12)
    assert np.allclose(fast.mo_grad_batch(*args), pure.mo_grad_batch(*args),
                       atol=1e-11)
    guard_args = (x, invc, POLE, lifted)
    assert np.array_equal(fast.mo_guard_batch(*guard_args),
                          pure.mo_guard_batch(*guard_args))


def test_ptc_kernels(rng, sys24):
    e_mats = list(sys24.mats)
    alpha, beta = np.sqrt(0.3), np.sqrt(0.7)
    x = unit_rows(rng, 1, 8)[0]
    assert np.allclose(fast.ptc_values(x, e_mats, alpha, beta),
                       pure.ptc_values(x, e_mats, alpha, beta), atol=1e-14)
    assert np.allclose(fast.ptc_grads(x, e_mats, alpha, beta),
                       pure.ptc_grads(x, e_mats, alpha, beta), atol=1e-14)
    pf, rf, _ = fast.ptc_project(x.copy(), e_mats, alpha, beta)
    pp, rp, _ = pure.ptc_project(x.copy(), e_mats, alpha, beta)
    assert rf < 1e-13 and rp < 1e-13
    assert np.allclose(pf, pp, atol=1e-10)
