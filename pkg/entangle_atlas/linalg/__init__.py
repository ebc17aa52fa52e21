from .matrix import (
    NON_HERMITIAN_TOL,
    TRACE_TOL,
    RANK_TOL,
    SUBSYSTEMS,
    psd_tol,
    check_subsystem,
    SystemDims,
    DensityMatrix,
    validate_density_matrix,
    check_dims,
    hermitian_violation,
    herm_eig,
    min_eig,
    numerical_rank,
    rank_from_spectrum,
    kron,
    ptrace_arrays,
    ptranspose_arrays,
    partial_trace,
    partial_transpose,
    reduction_operators,
    apply_local_unitary,
    identity,
)
from .states import pure_state, singlet_state, maximally_mixed, werner_state, product_state, diagonal_state
from .state_file import STATE_FILE_TRACE_TOL, parse_state_lines, read_state_file, state_file_lines, write_state_file
