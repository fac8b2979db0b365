import numpy as np
import pytest

from dupin.clifford import build_system


@pytest.fixture(scope="session")
def sys24():
    return build_system(2, 4)


@pytest.fixture(scope="session")
def sys38():
    return build_system(3, 8)


@pytest.fixture
def rng():
    return np.random.default_rng(0)
