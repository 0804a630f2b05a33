import numpy as np
import pytest

from dtclust.datasets import BUNDLED
from dtclust.geometry import delaunay


@pytest.fixture(scope="session")
def bundled():
    """name -> (points, ground_truth) for the bundled datasets."""
    return {name: gen() for name, gen in BUNDLED.items()}


@pytest.fixture(scope="session")
def bundled_tri(bundled):
    """name -> Triangulation, shared across tests (construction is the slow part)."""
    return {name: delaunay(points) for name, (points, _gt) in bundled.items()}


def random_points(seed, n, lo=0.0, hi=10.0):
    rng = np.random.default_rng(seed)
    return rng.uniform(lo, hi, (n, 2))
