import numpy as np
import pytest
from hypothesis import settings

from photonqm import make_grids

settings.register_profile("ci", max_examples=25, deadline=None)
settings.load_profile("ci")


@pytest.fixture(scope="session")
def small():
    return make_grids(16, 8.0)


@pytest.fixture(scope="session")
def desk():
    return make_grids(64, 16.0)


@pytest.fixture
def rng():
    return np.random.default_rng(1234)
