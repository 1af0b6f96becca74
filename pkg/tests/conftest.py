import numpy as np
import pytest

from msetsig import Signal


def rand_signal(rng, n=None, dt=0.01, t0=0.0, scale=1.0):
    """Random finite signal for property checks."""
    if n is None:
        n = int(rng.integers(1, 257))
    return Signal(dt, t0, scale * rng.standard_normal(n))


@pytest.fixture
def rng():
    return np.random.default_rng(20260822)
