import numpy as np

from .matrix import DensityMatrix, SystemDims, check_square, kron


def pure_state(psi, dims):
    """|psi><psi| for a state vector on C^{n_a} (x) C^{n_b}; psi is normalized first."""
    psi = np.asarray(psi, dtype=np.complex128).reshape(-1)
    psi = psi / np.linalg.norm(psi)
    return DensityMatrix.from_array(np.outer(psi, np.conj(psi)), dims, validate=False)


def singlet_state():
    """|psi-><psi-| with |psi-> = (|01> - |10>) / sqrt(2)."""
    return pure_state([0, 1, -1, 0], (2, 2))


def maximally_mixed(dims):
    if not isinstance(dims, SystemDims):
        dims = SystemDims(*dims)
    n = dims.total()
    return DensityMatrix.from_array(np.eye(n) / n, dims, validate=False)


def werner_state(p):
    """p |psi-><psi-| + (1 - p) I/4; separable iff p <= 1/3."""
    if not 0 <= p <= 1:
        raise ValueError(f"Werner weight must lie in [0, 1], got {p}")
    mat = p * singlet_state().mat + (1 - p) * np.eye(4) / 4
    return DensityMatrix.from_array(mat, (2, 2), validate=False)


def product_state(rho_a, rho_b):
    """rho_A (x) rho_B from two single-party density matrices (plain arrays)."""
    rho_a, rho_b = check_square(rho_a), check_square(rho_b)
    return DensityMatrix.from_array(kron(rho_a, rho_b), (rho_a.shape[-1], rho_b.shape[-1]), validate=False)


def diagonal_state(weights, dims):
    weights = np.asarray(weights, dtype=np.float64)
    return DensityMatrix.from_array(np.diag(weights / weights.sum()), dims, validate=False)
