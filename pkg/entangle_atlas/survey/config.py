from dataclasses import asdict, dataclass, fields
from typing import Optional, Tuple

import numpy as np

from ..criteria import CRIT_TOL
from ..exceptions import ConfigInvalid
from ..linalg import SystemDims
from ..sampling import SIMPLEX_SAMPLERS
from ..utils.data import is_integer, is_num, is_seq_of
from ..utils.meta import MAX_SEED, get_logger


MIN_MEANINGFUL_SAMPLES = 1000
SUPPORTED_N1 = (2, 3)


@dataclass
class SurveyConfig:
    """One Monte Carlo sweep over dims (n1, n2) for n2 in the inclusive ``n2_range``.

    ``chunk_size`` fixes how the samples of a dimension are cut into RNG substreams; together with ``seed`` it
    determines every record, whatever the number of ``workers``.
    """

    n1: int = 2
    n2_range: Tuple[int, int] = (2, 8)
    samples_per_dim: int = 100000
    seed: int = 0
    workers: int = 1
    q_finite: Optional[float] = None
    crit_tol: float = CRIT_TOL
    chunk_size: int = 1000
    simplex_method: str = "exponential"

    def __post_init__(self):
        if is_seq_of(self.n2_range, int) and len(self.n2_range) == 2:
            self.n2_range = tuple(int(n) for n in self.n2_range)

    @classmethod
    def from_dict(cls, cfg):
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(cfg) - known)
        if len(unknown) > 0:
            raise ConfigInvalid(f"Unknown survey options: {unknown}")
        return cls(**{key: value for key, value in cfg.items()}).validate()

    def to_dict(self):
        ret = asdict(self)
        ret["n2_range"] = list(self.n2_range)
        return ret

    @property
    def n2_values(self):
        return list(range(self.n2_range[0], self.n2_range[1] + 1))

    def dims_list(self):
        return [SystemDims(self.n1, n2) for n2 in self.n2_values]

    def num_chunks(self):
        return -(-self.samples_per_dim // self.chunk_size)

    def chunk_length(self, chunk_id):
        return min(self.chunk_size, self.samples_per_dim - chunk_id * self.chunk_size)

    def validate(self):
        if not is_integer(self.n1) or self.n1 not in SUPPORTED_N1:
            raise ConfigInvalid(f"n1 must be one of {SUPPORTED_N1}, got {self.n1!r}")
        if not (is_seq_of(self.n2_range, int) and len(self.n2_range) == 2):
            raise ConfigInvalid(f"n2_range must be a pair of integers, got {self.n2_range!r}")
        n2_min, n2_max = self.n2_range
        if n2_min < 2 or n2_max < n2_min:
            raise ConfigInvalid(f"n2_range must satisfy 2 <= n2_min <= n2_max, got {self.n2_range!r}")
        for name in ["samples_per_dim", "workers", "chunk_size"]:
            value = getattr(self, name)
            if not is_integer(value) or value < 1:
                raise ConfigInvalid(f"{name} must be a positive integer, got {value!r}")
        if not is_integer(self.seed) or not 0 <= self.seed <= MAX_SEED:
            raise ConfigInvalid(f"seed must be an integer in [0, 2**64), got {self.seed!r}")
        if self.q_finite is not None:
            if not is_num(self.q_finite) or not np.isfinite(self.q_finite) or self.q_finite <= 0:
                raise ConfigInvalid(f"q must be a finite positive number, got {self.q_finite!r}")
            self.q_finite = float(self.q_finite)
        if not is_num(self.crit_tol) or not np.isfinite(self.crit_tol) or self.crit_tol <= 0:
            raise ConfigInvalid(f"crit_tol must be a finite positive number, got {self.crit_tol!r}")
        self.crit_tol = float(self.crit_tol)
        if self.simplex_method not in SIMPLEX_SAMPLERS:
            raise ConfigInvalid(f"Unknown simplex method {self.simplex_method!r}, choose from {sorted(SIMPLEX_SAMPLERS.module_dict)}")
        if self.samples_per_dim < MIN_MEANINGFUL_SAMPLES:
            get_logger().warning(f"samples_per_dim={self.samples_per_dim} is below {MIN_MEANINGFUL_SAMPLES}; standard errors are rough.")
        return self
