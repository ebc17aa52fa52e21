"""
q-entropies of density-matrix spectra.

All spectrum functions work on the last axis, so a stack of spectra gives a stack of entropies. Spectra are clamped
to [0, 1] first (negative round-off eigenvalues become 0) and 0^q is taken as 0 for every q > 0.

With omega_q = Tr rho^q:
    Tsallis  S_q = (1 - omega_q) / (q - 1)
    Renyi    S_q = ln(omega_q) / (1 - q)
and both tend to the von Neumann entropy -Tr rho ln rho as q -> 1. The conditional Tsallis entropy
    S_q(A|B) = [S_q(rho) - S_q(rho_B)] / [1 + (1 - q) S_q(rho_B)] = (1 - omega_q(rho) / omega_q(rho_B)) / (q - 1)
is evaluated through the ratio of omegas in log space, which stays finite even when both omegas underflow.
"""
from dataclasses import asdict, dataclass

import numpy as np
from scipy.special import logsumexp

from ..exceptions import InvalidQ
from ..linalg import check_subsystem, herm_eig, ptrace_arrays


SERIES_WINDOW = 1e-6


def check_q(q):
    try:
        q = float(q)
    except (TypeError, ValueError):
        raise InvalidQ(f"q must be a positive real number or inf, got {q!r}")
    if np.isnan(q) or q <= 0:
        raise InvalidQ(f"q must be a positive real number or inf, got {q!r}")
    return q


def is_near_one(q):
    return abs(q - 1) < SERIES_WINDOW


def clamp_spectrum(spec):
    return np.clip(np.asarray(spec, dtype=np.float64), 0.0, 1.0)


def _log_spectrum(spec):
    spec = clamp_spectrum(spec)
    with np.errstate(divide="ignore"):
        return spec, np.log(spec)


def _plogp_moments(spec):
    """(sum lambda ln lambda, sum lambda ln^2 lambda) over the nonzero eigenvalues."""
    spec, log_spec = _log_spectrum(spec)
    log_spec = np.where(spec > 0, log_spec, 0.0)
    return np.sum(spec * log_spec, axis=-1), np.sum(spec * log_spec**2, axis=-1)


def von_neumann_entropy(spec):
    first, _ = _plogp_moments(spec)
    return -first


def log_omega(spec, q):
    """ln Tr rho^q, computed with logsumexp so that large q does not underflow."""
    q = check_q(q)
    _, log_spec = _log_spectrum(spec)
    with np.errstate(invalid="ignore"):
        return logsumexp(q * log_spec, axis=-1)


def omega_q(spec, q):
    """Tr rho^q; lambda_max for q = inf (the limit of omega_q^(1/q))."""
    q = check_q(q)
    if np.isinf(q):
        return clamp_spectrum(spec).max(axis=-1)
    return np.exp(log_omega(spec, q))


def tsallis_entropy(spec, q):
    """(1 - sum lambda^q) / (q - 1); von Neumann for q = 1 and 0 for q = inf.

    Within 1e-6 of q = 1 the first-order series S_1 - (q - 1)/2 * sum lambda ln^2 lambda replaces the quotient.
    """
    q = check_q(q)
    if np.isinf(q):
        return np.zeros(np.shape(spec)[:-1])
    if is_near_one(q):
        first, second = _plogp_moments(spec)
        return -first - (q - 1) / 2 * second
    return (1 - omega_q(spec, q)) / (q - 1)


def renyi_entropy(spec, q):
    """ln(sum lambda^q) / (1 - q); von Neumann for q = 1 and -ln lambda_max for q = inf."""
    q = check_q(q)
    if np.isinf(q):
        with np.errstate(divide="ignore"):
            return -np.log(clamp_spectrum(spec).max(axis=-1))
    if is_near_one(q):
        first, second = _plogp_moments(spec)
        return -first - (q - 1) / 2 * (second - first**2)
    return log_omega(spec, q) / (1 - q)


def tsallis_product(s_a, s_b, q):
    """Tsallis entropy of rho_A (x) rho_B from the factors: S_A + S_B + (1 - q) S_A S_B."""
    q = check_q(q)
    return s_a + s_b + (1 - q) * s_a * s_b


def tsallis_from_renyi(s_renyi, q):
    """F(x) = (exp((1 - q) x) - 1) / (1 - q), the increasing map from Renyi to Tsallis entropy."""
    q = check_q(q)
    if is_near_one(q):
        return s_renyi
    return np.expm1((1 - q) * s_renyi) / (1 - q)


def conditional_renyi_from_spectra(spec_joint, spec_marginal, q):
    return renyi_entropy(spec_joint, q) - renyi_entropy(spec_marginal, q)


def conditional_tsallis_from_spectra(spec_joint, spec_marginal, q):
    """S_q(joint | marginal); for q = inf the Renyi difference ln lambda_max(marginal) - ln lambda_max(joint)."""
    q = check_q(q)
    if np.isinf(q):
        return conditional_renyi_from_spectra(spec_joint, spec_marginal, q)
    if is_near_one(q):
        s_joint, s_marginal = tsallis_entropy(spec_joint, q), tsallis_entropy(spec_marginal, q)
        return (s_joint - s_marginal) / (1 + (1 - q) * s_marginal)
    # Overflows to -inf for strongly entangled states at large q; the sign is what matters.
    with np.errstate(over="ignore"):
        return -np.expm1(log_omega(spec_joint, q) - log_omega(spec_marginal, q)) / (q - 1)


def _spectra(rho):
    spec = herm_eig(rho.mat)
    spec_a = herm_eig(ptrace_arrays(rho.mat, rho.dims, "A"), check=False)
    spec_b = herm_eig(ptrace_arrays(rho.mat, rho.dims, "B"), check=False)
    return spec, spec_a, spec_b


def conditional_q_entropy(rho, q, conditioned_on="B"):
    """S_q(A|B) (conditioned_on="B") or S_q(B|A) (conditioned_on="A") of a DensityMatrix.

    Nonnegative for every separable state; the denominator 1 + (1 - q) S_q(rho_X) = omega_q(rho_X) is positive.
    """
    q = check_q(q)
    check_subsystem(conditioned_on)
    spec = herm_eig(rho.mat)
    spec_marginal = herm_eig(ptrace_arrays(rho.mat, rho.dims, conditioned_on), check=False)
    return float(conditional_tsallis_from_spectra(spec, spec_marginal, q))


def conditional_renyi_entropy(rho, q, conditioned_on="B"):
    """S_q^R(rho) - S_q^R(rho_X); same sign as :func:`conditional_q_entropy`."""
    q = check_q(q)
    check_subsystem(conditioned_on)
    spec = herm_eig(rho.mat)
    spec_marginal = herm_eig(ptrace_arrays(rho.mat, rho.dims, conditioned_on), check=False)
    return float(conditional_renyi_from_spectra(spec, spec_marginal, q))


@dataclass
class EntropyReport:
    """omega_q, Tsallis and Renyi entropies of rho, rho_A, rho_B and both conditional Tsallis entropies.

    For q = inf the limiting forms are reported: omega = lambda_max, Tsallis = 0 and the conditional entries are
    the Renyi differences ln lambda_max(rho_X) - ln lambda_max(rho), whose signs decide the q -> inf criterion.
    """

    q: float
    omega_q_joint: float
    omega_q_a: float
    omega_q_b: float
    tsallis_joint: float
    tsallis_a: float
    tsallis_b: float
    renyi_joint: float
    renyi_a: float
    renyi_b: float
    conditional_a_given_b: float
    conditional_b_given_a: float

    def to_dict(self):
        return asdict(self)


def entropy_report(rho, q):
    q = check_q(q)
    spec, spec_a, spec_b = _spectra(rho)
    values = dict(q=q)
    for suffix, s in [("joint", spec), ("a", spec_a), ("b", spec_b)]:
        values[f"omega_q_{suffix}"] = float(omega_q(s, q))
        values[f"tsallis_{suffix}"] = float(tsallis_entropy(s, q))
        values[f"renyi_{suffix}"] = float(renyi_entropy(s, q))
    values["conditional_a_given_b"] = float(conditional_tsallis_from_spectra(spec, spec_b, q))
    values["conditional_b_given_a"] = float(conditional_tsallis_from_spectra(spec, spec_a, q))
    return EntropyReport(**values)


__all__ = [
    "check_q",
    "clamp_spectrum",
    "von_neumann_entropy",
    "log_omega",
    "omega_q",
    "tsallis_entropy",
    "renyi_entropy",
    "tsallis_product",
    "tsallis_from_renyi",
    "conditional_renyi_from_spectra",
    "conditional_tsallis_from_spectra",
    "conditional_q_entropy",
    "conditional_renyi_entropy",
    "EntropyReport",
    "entropy_report",
]
