import numpy as np
import pytest

from dupin import otfkm
from dupin.clifford import build_system
from dupin.errors import AdmissibilityError


def test_check_admissible_needs_positive_multiplicities():
    # l = m + 1 would give empty +-1 eigenspaces
    with pytest.raises(AdmissibilityError):
        otfkm.check_admissible(build_system(3, 4))
    otfkm.check_admissible(build_system(2, 4))


def test_sample_points_satisfy_frame_constraints(sys24):
    for fp in otfkm.sample_v2(sys24, 3, 5):
        assert fp.residual(sys24) < 1e-10
        p = fp.point()
        assert abs(p @ p - 1.0) < 1e-12


def test_v2_manifold_dimension(sys24, sys38):
    assert otfkm.v2_manifold(sys24).dim == 4
    # (3, 8): ambient S^15, codimension m+1 = 4
    assert otfkm.v2_manifold(sys38).dim == 11


@pytest.mark.parametrize("ml", [(2, 4), (3, 8)])
def test_certify_small_run(ml):
    m, l = ml
    rep = otfkm.v2_spectrum_certify(build_system(m, l), samples=3,
                                    normals_per_sample=3, seed=0)
    assert rep.passed, rep.failures
    assert rep.expected_multiplicities == (l - m - 1, m, l - m - 1)
    assert rep.max_value_dev < 1e-6
    assert rep.max_psi_dev < 1e-6
    assert rep.max_normal_spread < 1e-6


def test_certify_report_lines(sys24):
    rep = otfkm.v2_spectrum_certify(sys24, samples=2, normals_per_sample=2, seed=1)
    text = "\n".join(rep.lines())
    assert "multiplicities (1, 2, 1)" in text
    assert "2 samples x 2 normals" in text
