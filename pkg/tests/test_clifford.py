import time

import numpy as np
import pytest

from dupin.clifford import build_system, min_dimension, radon_hurwitz, verify_system
from dupin.errors import ArgumentError, RadonHurwitzError

ADMISSIBLE = [(2, 2), (2, 4), (3, 4), (2, 8), (3, 8), (4, 8)]


@pytest.mark.parametrize("l,rho", [(1, 1), (2, 2), (3, 1), (4, 4), (5, 1),
                                   (6, 2), (7, 1), (8, 8), (12, 4), (16, 9),
                                   (32, 10), (64, 12), (128, 16)])
def test_radon_hurwitz_table(l, rho):
    assert radon_hurwitz(l) == rho


def test_radon_hurwitz_rejects_nonpositive():
    with pytest.raises(ArgumentError):
        radon_hurwitz(0)


@pytest.mark.parametrize("k,l", [(1, 2), (2, 4), (3, 4), (4, 8), (5, 8),
                                 (8, 16), (9, 32)])
def test_min_dimension(k, l):
    assert min_dimension(k) == l


@pytest.mark.parametrize("m,l", ADMISSIBLE)
def test_build_and_verify(m, l):
    system = build_system(m, l)
    assert system.m == m and system.l == l
    assert len(system.mats) == m - 1
    for e in system.mats:
        assert e.shape == (l, l)
    assert verify_system(system).max_violation < 1e-12


@pytest.mark.parametrize("m,l", [(2, 3), (5, 4), (4, 6), (10, 16)])
def test_inadmissible_pairs_rejected(m, l):
    with pytest.raises(RadonHurwitzError):
        build_system(m, l)


def test_generators_are_complex_structures(sys38):
    for e in sys38.mats:
        assert np.allclose(e @ e, -np.eye(8), atol=1e-14)
        assert np.allclose(e.T, -e, atol=1e-14)
    # pairwise anticommuting
    for i, a in enumerate(sys38.mats):
        for b in sys38.mats[i + 1:]:
            assert np.allclose(a @ b + b @ a, 0.0, atol=1e-14)


def test_entries_are_signed_units(sys24):
    for e in sys24.mats:
        nz = e[e != 0]
        assert np.all(np.isin(nz, [-1.0, 1.0]))


def test_full_family_under_one_second():
    t0 = time.time()
    for m, l in ADMISSIBLE:
        assert verify_system(build_system(m, l)).max_violation < 1e-12
    assert time.time() - t0 < 1.0
