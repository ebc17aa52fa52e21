"""
Separability criteria on bipartite density matrices.

``evaluate_batch`` is the workhorse: it takes a stack of matrices, diagonalizes rho, rho_A, rho_B, the partial
transpose and the two reduction operators once each, and turns the spectra into one margin per criterion:

    ppt             lambda_min([1 (x) T] rho)
    reduction       min(lambda_min(1 (x) rho_B - rho), lambda_min(rho_A (x) 1 - rho))
    majorization    min over k < N and X of sum_{i<=k} lambda_i(rho_X) - sum_{i<=k} lambda_i(rho), rho_X zero-padded to N
    q_entropic_inf  min over X of lambda_max(rho_X) - lambda_max(rho)
    q_entropic      min over X of S_q(rho | rho_X) for a finite q

The k = 1 term of the majorization margin is the q_entropic_inf margin itself, so majorization => q_entropic_inf holds
exactly, not only up to round-off. The single-state checks are views on the same arithmetic.
"""
from functools import cached_property

import numpy as np

from ..linalg import check_dims, herm_eig, hermitian_violation, ptrace_arrays, ptranspose_arrays, rank_from_spectrum, reduction_operators
from ..linalg.matrix import NON_HERMITIAN_TOL
from ..exceptions import NonHermitianInput
from .entropy import check_q, conditional_tsallis_from_spectra
from .verdict import CRIT_TOL, MAJORIZATION, PPT, Q_ENTROPIC, Q_ENTROPIC_INF, REDUCTION, BatchVerdict


class StateSpectra:
    """Descending spectra of rho, rho_A and rho_B for a stack of states.

    Each spectrum is diagonalized on first use and shared by every criterion after that.
    """

    def __init__(self, mats, dims):
        self.mats = check_dims(mats, dims)
        self.dims = dims

    @cached_property
    def rho_a(self):
        return ptrace_arrays(self.mats, self.dims, "A")

    @cached_property
    def rho_b(self):
        return ptrace_arrays(self.mats, self.dims, "B")

    @cached_property
    def joint(self):
        return herm_eig(self.mats, check=False)

    @cached_property
    def a(self):
        return herm_eig(self.rho_a, check=False)

    @cached_property
    def b(self):
        return herm_eig(self.rho_b, check=False)

    def padded(self, label):
        spec = self.a if label == "A" else self.b
        pad = self.dims.total() - spec.shape[-1]
        return np.concatenate([spec, np.zeros(spec.shape[:-1] + (pad,))], axis=-1)


def ppt_margin(spectra):
    return herm_eig(ptranspose_arrays(spectra.mats, spectra.dims, "B"), check=False)[..., -1]


def reduction_margin(spectra):
    op_b, op_a = reduction_operators(spectra.mats, spectra.dims, spectra.rho_a, spectra.rho_b)
    return np.minimum(herm_eig(op_b, check=False)[..., -1], herm_eig(op_a, check=False)[..., -1])


def majorization_margin(spectra):
    # k = N compares two unit traces and carries only round-off.
    joint_sums = np.cumsum(spectra.joint, axis=-1)[..., :-1]
    margins = [np.min(np.cumsum(spectra.padded(label), axis=-1)[..., :-1] - joint_sums, axis=-1) for label in ["A", "B"]]
    return np.minimum(*margins)


def q_entropic_inf_margin(spectra):
    lam_max = spectra.joint[..., 0]
    return np.minimum(spectra.a[..., 0] - lam_max, spectra.b[..., 0] - lam_max)


def q_entropic_margin(spectra, q):
    q = check_q(q)
    a_given_b = conditional_tsallis_from_spectra(spectra.joint, spectra.b, q)
    b_given_a = conditional_tsallis_from_spectra(spectra.joint, spectra.a, q)
    return np.minimum(a_given_b, b_given_a)


def evaluate_batch(mats, dims, q_finite=None, crit_tol=CRIT_TOL):
    """Evaluate every criterion on a stack of density matrices of shape (M, N, N).

    Args:
        mats (np.ndarray): Hermitian, unit-trace matrices.
        dims (SystemDims): Subsystem dimensions.
        q_finite (float | None): Also evaluate the finite-q entropic criterion.
        crit_tol (float): Criterion tolerance.
    Returns:
        BatchVerdict
    """
    mats = np.asarray(mats)
    if mats.ndim == 2:
        mats = mats[None]
    spectra = StateSpectra(mats, dims)
    margins = {
        PPT: ppt_margin(spectra),
        REDUCTION: reduction_margin(spectra),
        MAJORIZATION: majorization_margin(spectra),
        Q_ENTROPIC_INF: q_entropic_inf_margin(spectra),
    }
    if q_finite is not None:
        margins[Q_ENTROPIC] = q_entropic_margin(spectra, q_finite)
    ranks = rank_from_spectrum(spectra.joint)
    return BatchVerdict(margins=margins, ranks=np.atleast_1d(ranks), max_local_dim=max(dims.n_a, dims.n_b), crit_tol=crit_tol)


def _check_hermitian(rho):
    violation = float(np.max(hermitian_violation(rho.mat)))
    if violation > NON_HERMITIAN_TOL:
        raise NonHermitianInput(f"Matrix is not Hermitian: max |m - m^dagger| = {violation:.3e}")


def _single(rho):
    _check_hermitian(rho)
    return StateSpectra(rho.mat[None], rho.dims)


def check_ppt(rho, crit_tol=CRIT_TOL):
    """lambda_min([1 (x) T] rho) >= -crit_tol."""
    return bool(ppt_margin(_single(rho))[0] >= -crit_tol)


def check_reduction(rho, crit_tol=CRIT_TOL):
    """1 (x) rho_B - rho >= 0 and rho_A (x) 1 - rho >= 0, both up to -crit_tol."""
    return bool(reduction_margin(_single(rho))[0] >= -crit_tol)


def check_majorization(rho, crit_tol=CRIT_TOL):
    """Both lambda(rho_A) and lambda(rho_B) majorize lambda(rho)."""
    return bool(majorization_margin(_single(rho))[0] >= -crit_tol)


def check_q_entropic_inf(rho, crit_tol=CRIT_TOL):
    """lambda_max(rho_A) >= lambda_max(rho) and lambda_max(rho_B) >= lambda_max(rho): the q -> inf entropic criterion."""
    return bool(q_entropic_inf_margin(_single(rho))[0] >= -crit_tol)


def check_q_entropic(rho, q, crit_tol=CRIT_TOL):
    """S_q(A|B) >= -crit_tol and S_q(B|A) >= -crit_tol."""
    return bool(q_entropic_margin(_single(rho), q)[0] >= -crit_tol)


def check_rank_separable(rho, crit_tol=CRIT_TOL):
    """PPT and rank <= max(n_a, n_b): a sufficient condition for separability. False is inconclusive."""
    spectra = _single(rho)
    if ppt_margin(spectra)[0] < -crit_tol:
        return False
    return bool(rank_from_spectrum(spectra.joint[0]) <= max(rho.dims.n_a, rho.dims.n_b))


def evaluate_all(rho, q_finite=None, crit_tol=CRIT_TOL):
    """Full :class:`CriteriaVerdict` of one density matrix."""
    _check_hermitian(rho)
    return evaluate_batch(rho.mat[None], rho.dims, q_finite=q_finite, crit_tol=crit_tol).verdict(0)


__all__ = [
    "StateSpectra",
    "ppt_margin",
    "reduction_margin",
    "majorization_margin",
    "q_entropic_inf_margin",
    "q_entropic_margin",
    "evaluate_batch",
    "check_ppt",
    "check_reduction",
    "check_majorization",
    "check_q_entropic_inf",
    "check_q_entropic",
    "check_rank_separable",
    "evaluate_all",
]
