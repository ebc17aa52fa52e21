"""
Dense complex matrix primitives for bipartite states.

Matrices are complex numpy arrays. Every array-level routine accepts a stack of shape (..., N, N) so that the survey
can push a whole chunk of sampled states through one LAPACK call; the DensityMatrix-level functions are thin views
on the same code.
"""
from dataclasses import dataclass

import numpy as np

from ..exceptions import ConvergenceFailure, DimensionMismatch, InvalidDimension, InvalidState, InvalidSubsystem, NonHermitianInput


NON_HERMITIAN_TOL = 1e-8
TRACE_TOL = 1e-10
RANK_TOL = 1e-9
SUBSYSTEMS = ("A", "B")


def psd_tol(n):
    return 1e-10 * n


def check_subsystem(label):
    if label not in SUBSYSTEMS:
        raise InvalidSubsystem(f"Subsystem label must be one of {SUBSYSTEMS}, got {label!r}")
    return label


@dataclass(frozen=True)
class SystemDims:
    n_a: int
    n_b: int

    def __post_init__(self):
        for name in ["n_a", "n_b"]:
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, (int, np.integer)) or value < 1:
                raise InvalidDimension(f"{name} must be a positive integer, got {value!r}")
            object.__setattr__(self, name, int(value))

    def total(self):
        return self.n_a * self.n_b

    def of(self, label):
        return self.n_a if check_subsystem(label) == "A" else self.n_b

    def as_tuple(self):
        return (self.n_a, self.n_b)

    def __str__(self):
        return f"{self.n_a}x{self.n_b}"


def check_square(mats):
    mats = np.asarray(mats)
    if mats.ndim < 2 or mats.shape[-1] != mats.shape[-2] or mats.shape[-1] < 1:
        raise DimensionMismatch(f"Expected square matrices, got shape {mats.shape}")
    return mats


def check_dims(mats, dims):
    mats = check_square(mats)
    if dims.total() != mats.shape[-1]:
        raise DimensionMismatch(f"dims {dims} give N={dims.total()} but the matrix has dim {mats.shape[-1]}")
    return mats


def hermitian_violation(mats):
    """Largest absolute entry of m - m^dagger (per matrix for stacks)."""
    mats = check_square(mats)
    return np.abs(mats - np.conj(np.swapaxes(mats, -1, -2))).max(axis=(-1, -2))


def _eigvalsh(mats):
    try:
        return np.linalg.eigvalsh(mats)
    except np.linalg.LinAlgError as e:
        raise ConvergenceFailure(f"Hermitian eigensolver did not converge: {e}") from e


def herm_eig(m, check=True):
    """All eigenvalues of a Hermitian matrix (or stack), sorted descending along the last axis.

    Raises NonHermitianInput when some entry of m - m^dagger exceeds 1e-8 in modulus and ConvergenceFailure when
    LAPACK fails.
    """
    m = check_square(m)
    if check:
        violation = np.max(hermitian_violation(m))
        if violation > NON_HERMITIAN_TOL:
            raise NonHermitianInput(f"Matrix is not Hermitian: max |m - m^dagger| = {violation:.3e}")
    return _eigvalsh(m)[..., ::-1]


def min_eig(m, check=True):
    return herm_eig(m, check=check)[..., -1]


def numerical_rank(m, rank_tol=RANK_TOL, check=True):
    """Count of eigenvalues above ``rank_tol * lambda_max``; 0 for the zero matrix."""
    return rank_from_spectrum(herm_eig(m, check=check), rank_tol)


def rank_from_spectrum(spectrum, rank_tol=RANK_TOL):
    spectrum = np.asarray(spectrum)
    lam_max = spectrum[..., :1]
    ranks = np.sum((spectrum > rank_tol * lam_max) & (lam_max > 0), axis=-1)
    return ranks if ranks.ndim > 0 else int(ranks)


def kron(a, b):
    """Kronecker product; block (i, j) of the result is a[i, j] * b. Stacks broadcast over leading axes."""
    a, b = check_square(a), check_square(b)
    n, m = a.shape[-1], b.shape[-1]
    out = np.einsum("...ij,...kl->...ikjl", a, b)
    return out.reshape(out.shape[:-4] + (n * m, n * m))


def _blocks(mats, dims):
    mats = check_dims(mats, dims)
    return mats.reshape(mats.shape[:-2] + (dims.n_a, dims.n_b, dims.n_a, dims.n_b))


def ptrace_arrays(mats, dims, keep="A"):
    """Reduced matrices of a stack of bipartite matrices; ``keep`` is the subsystem that survives."""
    blocks = _blocks(mats, dims)
    if check_subsystem(keep) == "A":
        return np.einsum("...ijkj->...ik", blocks)
    return np.einsum("...ijil->...jl", blocks)


def ptranspose_arrays(mats, dims, on="B"):
    """Partial transpose of a stack; a pure entry permutation, so applying it twice returns the input exactly."""
    blocks = _blocks(mats, dims)
    n = dims.total()
    if check_subsystem(on) == "B":
        out = np.swapaxes(blocks, -3, -1)
    else:
        out = np.swapaxes(blocks, -4, -2)
    return np.ascontiguousarray(out).reshape(blocks.shape[:-4] + (n, n))


def identity(n):
    return np.eye(n, dtype=np.complex128)


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """A unit-trace, positive semidefinite Hermitian matrix on C^{n_a} (x) C^{n_b}."""

    mat: np.ndarray
    dims: SystemDims

    @classmethod
    def from_array(cls, mat, dims, validate=True, trace_tol=TRACE_TOL, normalize=False):
        """Wrap ``mat`` as a density matrix.

        Args:
            mat (array_like): N x N complex matrix.
            dims (SystemDims | tuple): Subsystem dimensions with n_a * n_b = N.
            validate (bool): Check Hermiticity, trace and positivity.
            trace_tol (float): Accepted |trace - 1|.
            normalize (bool): Divide by the trace after validation.
        """
        if not isinstance(dims, SystemDims):
            dims = SystemDims(*dims)
        mat = check_dims(np.array(mat, dtype=np.complex128), dims)
        if mat.ndim != 2:
            raise DimensionMismatch(f"Expected a single N x N matrix, got shape {mat.shape}")
        if validate:
            validate_density_matrix(mat, trace_tol=trace_tol)
        if normalize:
            mat = mat / np.trace(mat).real
        mat.setflags(write=False)
        return cls(mat, dims)

    @property
    def dim(self):
        return self.mat.shape[-1]

    def spectrum(self):
        return herm_eig(self.mat)

    def trace(self):
        return float(np.trace(self.mat).real)


def validate_density_matrix(mat, trace_tol=TRACE_TOL):
    mat = check_square(mat)
    violation = float(np.max(hermitian_violation(mat)))
    if violation > NON_HERMITIAN_TOL:
        raise NonHermitianInput(f"Matrix is not Hermitian: max |m - m^dagger| = {violation:.3e}")
    trace = np.trace(mat)
    if abs(trace - 1) > trace_tol:
        raise InvalidState(f"Trace must be 1 within {trace_tol:g}, got {trace.real:.12g}{trace.imag:+.3g}j")
    lam_min = float(min_eig(mat, check=False))
    if lam_min < -psd_tol(mat.shape[-1]):
        raise InvalidState(f"Matrix is not positive semidefinite: smallest eigenvalue {lam_min:.3e}")


def partial_trace(rho, keep="A"):
    """rho_A = Tr_B[rho] (keep="A") or rho_B = Tr_A[rho] (keep="B")."""
    reduced = ptrace_arrays(rho.mat, rho.dims, keep)
    dims = SystemDims(rho.dims.of(keep), 1)
    return DensityMatrix.from_array(reduced, dims, validate=False)


def partial_transpose(rho, on="B"):
    """[1 (x) T](rho) for on="B", [T (x) 1](rho) for on="A"; returned as a plain matrix since it need not be PSD."""
    return ptranspose_arrays(rho.mat, rho.dims, on)


def reduction_operators(mats, dims, rho_a=None, rho_b=None):
    """The two operators 1 (x) rho_B - rho and rho_A (x) 1 - rho whose positivity is the reduction criterion."""
    if rho_a is None:
        rho_a = ptrace_arrays(mats, dims, "A")
    if rho_b is None:
        rho_b = ptrace_arrays(mats, dims, "B")
    op_b = kron(np.broadcast_to(identity(dims.n_a), rho_a.shape), rho_b) - mats
    op_a = kron(rho_a, np.broadcast_to(identity(dims.n_b), rho_b.shape)) - mats
    return op_b, op_a


def apply_local_unitary(rho, u_a, u_b):
    """(U_A (x) U_B) rho (U_A (x) U_B)^dagger."""
    u = kron(u_a, u_b)
    mat = u @ rho.mat @ np.conj(u.T)
    return DensityMatrix.from_array((mat + np.conj(mat.T)) / 2, rho.dims, validate=False)
