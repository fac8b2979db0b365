import numpy as np

from dupin.quat import I, J, K, ONE, Quaternion, pair_dot, qconj, qmul


def test_unit_table():
    assert (I * J).as_array().tolist() == K.as_array().tolist()
    assert (J * K).as_array().tolist() == I.as_array().tolist()
    assert (K * I).as_array().tolist() == J.as_array().tolist()
    assert (I * I).as_array().tolist() == (-ONE).as_array().tolist()


def test_noncommutative():
    assert not np.allclose((I * J).as_array(), (J * I).as_array())


def test_mul_associative(rng):
    a, b, c = (Quaternion.from_array(rng.normal(size=4)) for _ in range(3))
    lhs = qmul(qmul(a, b), c).as_array()
    rhs = qmul(a, qmul(b, c)).as_array()
    assert np.allclose(lhs, rhs, atol=1e-12)


def test_conj_antiautomorphism(rng):
    a = Quaternion.from_array(rng.normal(size=4))
    b = Quaternion.from_array(rng.normal(size=4))
    assert np.allclose(qconj(qmul(a, b)).as_array(),
                       qmul(qconj(b), qconj(a)).as_array(), atol=1e-12)


def test_norm_multiplicative(rng):
    a = Quaternion.from_array(rng.normal(size=4))
    b = Quaternion.from_array(rng.normal(size=4))
    assert np.isclose((a * b).norm(), a.norm() * b.norm())


def test_scalar_mul_and_sub(rng):
    a = Quaternion.from_array(rng.normal(size=4))
    assert np.allclose((2.0 * a).as_array(), 2.0 * a.as_array())
    assert np.allclose((a - a).as_array(), 0.0)


def test_pair_dot_is_r8_inner(rng):
    vals = rng.normal(size=16)
    a, b, u, v = (Quaternion.from_array(vals[4 * i:4 * i + 4]) for i in range(4))
    assert np.isclose(pair_dot(a, b, u, v), vals[:8] @ vals[8:])
