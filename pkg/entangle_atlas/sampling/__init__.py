from .builder import SIMPLEX_SAMPLERS, build_simplex_sampler
from .simplex import ExponentialSimplex, SpacingsSimplex, sample_simplex, sort_descending
from .unitary import ginibre, haar_unitary, unitarity_error
from .sampler import SamplerConfig, NaturalMeasureSampler, assemble_states, sample_state, sample_states, replay_sample
