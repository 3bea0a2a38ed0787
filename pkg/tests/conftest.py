import numpy as np
import pytest

from harmodisk import DiskGeometry


@pytest.fixture(scope="session")
def unit_disk():
    return DiskGeometry(1.0)


def random_disk_points(rng, count, radius=1.0):
    """Uniform random points of the closed disk of the given radius."""
    rho = radius * np.sqrt(rng.uniform(0.0, 1.0, count))
    ang = rng.uniform(-np.pi, np.pi, count)
    return rho * np.cos(ang), rho * np.sin(ang)
