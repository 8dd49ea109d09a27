import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from schwinger_info import StateVector, build_sector_basis


@pytest.fixture(scope="session")
def basis8():
    return build_sector_basis(8, None)


@pytest.fixture
def rng():
    return np.random.default_rng(42)


@pytest.fixture
def random_state8(basis8, rng):
    v = rng.standard_normal(256) + 1j * rng.standard_normal(256)
    return StateVector(basis8, v / np.linalg.norm(v))
