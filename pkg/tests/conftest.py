import numpy as np
import pytest

from adconn.framework import Placement


@pytest.fixture
def rng():
    return np.random.default_rng(20240815)


def random_placement(rng, n, d, scale=1.0):
    return Placement(scale * rng.standard_normal((n, d)))
