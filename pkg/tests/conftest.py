import numpy as np
import pytest

from entangle_atlas.linalg import DensityMatrix, SystemDims
from entangle_atlas.sampling import NaturalMeasureSampler, SamplerConfig, haar_unitary


@pytest.fixture
def rng():
    return np.random.default_rng(20240607)


@pytest.fixture
def draw_states():
    """draw_states(dims, size, seed=0) -> stack of natural-measure density matrices of shape (size, N, N)."""

    def _draw(dims, size, seed=0, stream_id=0):
        cfg = SamplerConfig(SystemDims(*dims), seed=seed, stream_id=stream_id)
        mats, _ = NaturalMeasureSampler(cfg).sample_batch(size)
        return mats

    return _draw


@pytest.fixture
def random_density(rng):
    """random_density(n) -> n x n natural-measure density matrix as a plain array."""

    def _random(n):
        u = haar_unitary(n, rng)
        p = rng.dirichlet(np.ones(n))
        mat = (u * p) @ u.conj().T
        return (mat + mat.conj().T) / 2

    return _random


def as_state(mat, dims):
    return DensityMatrix.from_array(mat, dims, validate=False)
