import numpy as np
import pytest

from twoatom import qmat


@pytest.fixture
def rng():
    return np.random.default_rng(20240917)


def random_states(seed: int, n: int):
    """Seeded full-rank Gaussian-ensemble states, reproducible across tests."""
    gen = np.random.default_rng(seed)
    return [qmat.random_density_matrix(gen) for _ in range(n)]
