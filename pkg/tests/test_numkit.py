import numpy as np
import pytest

from dupin import numkit
from dupin.errors import NonFiniteError, RankDeficientError


def test_cluster_values_groups_with_tolerance():
    spec = numkit.cluster_values([1.0, 1.0 + 3e-5, -2.0, 0.5], tol=1e-4)
    assert spec.g == 3
    assert np.allclose(spec.values, [-2.0, 0.5, 1.0 + 1.5e-5])
    assert tuple(spec.multiplicities) == (1, 1, 2)


def test_cluster_values_sorted_ascending():
    spec = numkit.cluster_values([3.0, -1.0, 0.0], tol=1e-8)
    assert np.all(np.diff(spec.values) > 0)
    assert list(spec.pairs()) == [(-1.0, 1), (0.0, 1), (3.0, 1)]


def test_cluster_ambiguity_flag():
    # gap right in the ambiguous band [tol/2, 2 tol]
    spec = numkit.cluster_values([0.0, 1.5e-4], tol=1e-4, warn=False)
    assert spec.ambiguous


def test_sym_eig_clustered_known_multiplicities(rng):
    q, _ = np.linalg.qr(rng.normal(size=(6, 6)))
    d = np.diag([2.0, 2.0, 2.0, -1.0, -1.0, 5.0])
    spec = numkit.sym_eig_clustered(q @ d @ q.T)
    assert tuple(spec.multiplicities) == (2, 3, 1)
    assert np.allclose(spec.values, [-1.0, 2.0, 5.0], atol=1e-10)


def test_sym_eig_vectors_orthonormal(rng):
    a = rng.normal(size=(5, 5))
    a = a + a.T
    spec, vecs = numkit.sym_eig_clustered(a, return_vectors=True)
    assert np.allclose(vecs.T @ vecs, np.eye(5), atol=1e-12)
    assert sum(spec.multiplicities) == 5


def test_orthonormalize_rows(rng):
    v = rng.normal(size=(3, 7))
    q = numkit.orthonormalize(v)
    assert np.allclose(q @ q.T, np.eye(3), atol=1e-12)
    # no pivoting: first output is the normalized first input
    assert np.allclose(q[0], v[0] / np.linalg.norm(v[0]))


def test_orthonormalize_rank_deficient_reports_index():
    v = np.array([[1.0, 0.0], [2.0, 0.0]])
    with pytest.raises(RankDeficientError, match="vector 1"):
        numkit.orthonormalize(v)


def test_orthonormalize_rejects_nan():
    with pytest.raises(NonFiniteError):
        numkit.orthonormalize(np.array([[np.nan, 1.0]]))


def test_jacobian_fd_matches_analytic():
    fn = lambda x: np.array([np.sin(x[0]) * x[1], x[0] ** 2])
    x = np.array([0.3, -1.2])
    jac = numkit.jacobian_fd(fn, x)
    expected = np.array([[np.cos(0.3) * -1.2, np.sin(0.3)], [0.6, 0.0]])
    assert np.allclose(jac, expected, atol=1e-9)


def test_jacobian_fd_rejects_nonfinite_chain():
    with pytest.raises(NonFiniteError):
        numkit.jacobian_fd(lambda x: np.array([np.nan]), np.array([0.0]))
