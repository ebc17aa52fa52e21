"""
Lebesgue-uniform points of the probability simplex, i.e. Dirichlet(1, ..., 1).

Two exact methods are registered. "exponential" (the default) normalizes n i.i.d. Exp(1) variates; "spacings" takes the
gaps between n - 1 sorted Uniform(0, 1) variates. They consume the random stream differently, which makes "spacings"
an independent oracle for "exponential" in tests.
"""
import numpy as np

from ..exceptions import InvalidDimension
from .builder import SIMPLEX_SAMPLERS, build_simplex_sampler


def _check_n(n):
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 1:
        raise InvalidDimension(f"Simplex dimension must be a positive integer, got {n!r}")
    return int(n)


def _shape(size, n):
    if size is None:
        return (n,)
    return tuple(np.atleast_1d(size)) + (n,)


@SIMPLEX_SAMPLERS.register_module(name="exponential")
class ExponentialSimplex:
    def __init__(self, sort=True):
        self.sort = sort

    def __call__(self, n, rng, size=None):
        n = _check_n(n)
        g = rng.standard_exponential(_shape(size, n))
        p = g / g.sum(axis=-1, keepdims=True)
        return sort_descending(p) if self.sort else p


@SIMPLEX_SAMPLERS.register_module(name="spacings")
class SpacingsSimplex:
    def __init__(self, sort=True):
        self.sort = sort

    def __call__(self, n, rng, size=None):
        n = _check_n(n)
        shape = _shape(size, n)
        u = np.sort(rng.random(shape[:-1] + (n - 1,)), axis=-1)
        edges = np.concatenate([np.zeros(shape[:-1] + (1,)), u, np.ones(shape[:-1] + (1,))], axis=-1)
        p = np.diff(edges, axis=-1)
        return sort_descending(p) if self.sort else p


def sort_descending(p):
    return np.sort(p, axis=-1)[..., ::-1]


def sample_simplex(n, rng, size=None, method="exponential", sort=True):
    """Uniform point(s) of the (n-1)-simplex, sorted descending unless ``sort=False``.

    Args:
        n (int): Number of coordinates, n >= 1.
        rng (np.random.Generator): Random stream.
        size (int | tuple | None): Leading batch shape.
        method (str): A name registered in SIMPLEX_SAMPLERS.
    """
    sampler = build_simplex_sampler(dict(type=method, sort=sort))
    return sampler(n, rng, size=size)
