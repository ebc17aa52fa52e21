from dataclasses import dataclass

import numpy as np

from ..linalg import DensityMatrix, SystemDims
from ..utils.meta import check_seed, get_random_generator
from .simplex import sample_simplex
from .unitary import haar_unitary


@dataclass(frozen=True)
class SamplerConfig:
    """Natural measure mu = Haar x Lebesgue(simplex) on the states of ``dims``.

    (seed, stream_id) fixes the sample sequence; the substream is keyed by the dims as well, so different dimensions
    never share random numbers.
    """

    dims: SystemDims
    seed: int = 0
    stream_id: int = 0
    simplex_method: str = "exponential"

    def __post_init__(self):
        if not isinstance(self.dims, SystemDims):
            object.__setattr__(self, "dims", SystemDims(*self.dims))
        object.__setattr__(self, "seed", check_seed(self.seed))
        object.__setattr__(self, "stream_id", check_seed(self.stream_id, "stream_id"))

    def make_rng(self):
        return get_random_generator(self.seed, self.stream_id, key=self.dims.as_tuple())


def assemble_states(unitaries, spectra):
    """U D[lambda] U^dagger, symmetrized so the result is Hermitian to the last bit."""
    mats = (unitaries * spectra[..., None, :]) @ np.conj(np.swapaxes(unitaries, -1, -2))
    return (mats + np.conj(np.swapaxes(mats, -1, -2))) / 2


def sample_states(dims, rng, size, simplex_method="exponential"):
    """Draw ``size`` states at once: all spectra first, then all unitaries.

    Returns:
        tuple(np.ndarray, np.ndarray): matrices of shape (size, N, N) and their sorted spectra (size, N).
    """
    n = dims.total()
    spectra = sample_simplex(n, rng, size=size, method=simplex_method)
    unitaries = haar_unitary(n, rng, size=size)
    return assemble_states(unitaries, spectra), spectra


def sample_state(cfg, rng=None):
    """One state rho = U D U^dagger with U Haar on U(N) and the spectrum uniform on the simplex."""
    if rng is None:
        rng = cfg.make_rng()
    n = cfg.dims.total()
    spectrum = sample_simplex(n, rng, method=cfg.simplex_method)
    unitary = haar_unitary(n, rng)
    return DensityMatrix.from_array(assemble_states(unitary, spectrum), cfg.dims, validate=False)


class NaturalMeasureSampler:
    """Single-owner sampler bound to one substream."""

    def __init__(self, cfg):
        self.cfg = cfg
        self.rng = cfg.make_rng()

    @property
    def dims(self):
        return self.cfg.dims

    def sample(self):
        return sample_state(self.cfg, self.rng)

    def sample_batch(self, size):
        return sample_states(self.cfg.dims, self.rng, size, simplex_method=self.cfg.simplex_method)


def replay_sample(cfg, index, batch_size):
    """Regenerate sample ``index`` of a batch of ``batch_size`` drawn from a fresh ``cfg`` stream.

    The batch size matters because sample_states draws every spectrum before the first unitary.
    """
    if not 0 <= index < batch_size:
        raise IndexError(f"index {index} outside a batch of {batch_size}")
    mats, _ = NaturalMeasureSampler(cfg).sample_batch(batch_size)
    return DensityMatrix.from_array(mats[index], cfg.dims, validate=False)
