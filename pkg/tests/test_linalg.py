import numpy as np
import pytest

from entangle_atlas.exceptions import DimensionMismatch, InvalidDimension, InvalidState, InvalidSubsystem, NonHermitianInput
from entangle_atlas.linalg import (
    DensityMatrix,
    SystemDims,
    apply_local_unitary,
    diagonal_state,
    herm_eig,
    kron,
    maximally_mixed,
    min_eig,
    numerical_rank,
    partial_trace,
    partial_transpose,
    product_state,
    ptranspose_arrays,
    singlet_state,
    werner_state,
)
from entangle_atlas.sampling import haar_unitary


def test_system_dims():
    dims = SystemDims(2, 3)
    assert dims.total() == 6
    assert dims.of("A") == 2 and dims.of("B") == 3
    assert str(dims) == "2x3"
    for bad in [(0, 2), (2, -1), (2.0, 2), (True, 2)]:
        with pytest.raises(InvalidDimension):
            SystemDims(*bad)
    with pytest.raises(InvalidSubsystem):
        dims.of("C")


def test_herm_eig_examples():
    np.testing.assert_allclose(herm_eig(np.eye(3)), [1, 1, 1])
    perm = np.diag([0.3, 0.2, 0.5])
    np.testing.assert_allclose(herm_eig(perm), [0.5, 0.3, 0.2])
    np.testing.assert_allclose(herm_eig(singlet_state().mat), [1, 0, 0, 0], atol=1e-12)


def test_herm_eig_rejects_non_hermitian():
    with pytest.raises(NonHermitianInput):
        herm_eig(np.array([[1.0, 1.0], [0.0, 1.0]]))
    # tiny asymmetry is accepted
    herm_eig(np.array([[1.0, 1e-10], [0.0, 1.0]]))


def test_herm_eig_trace_sum(rng):
    for n in [2, 5, 9]:
        a = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        m = (a + a.conj().T) / 2
        assert abs(herm_eig(m).sum() - np.trace(m).real) <= 1e-9 * n


def test_kron_examples():
    np.testing.assert_array_equal(kron(np.eye(2), np.eye(2)), np.eye(4))
    np.testing.assert_array_equal(kron(np.diag([1, 0]), np.diag([0, 1])), np.diag([0, 1, 0, 0]))
    a, b = np.arange(4).reshape(2, 2), np.arange(9).reshape(3, 3)
    np.testing.assert_array_equal(kron(a, b), np.kron(a, b))


@pytest.mark.parametrize("n", [2, 3])
def test_kron_spectrum_is_pairwise_products(rng, n):
    for _ in range(5):
        x = rng.standard_normal((2, n, n)) + 1j * rng.standard_normal((2, n, n))
        a, b = [(m + m.conj().T) / 2 for m in x]
        expected = np.sort(np.outer(herm_eig(a), herm_eig(b)).ravel())[::-1]
        np.testing.assert_allclose(herm_eig(kron(a, b)), expected, atol=1e-9)


def test_partial_trace_examples(random_density):
    rho_a, rho_b = random_density(2), random_density(3)
    rho = product_state(rho_a, rho_b)
    np.testing.assert_allclose(partial_trace(rho, "A").mat, rho_a, atol=1e-12)
    np.testing.assert_allclose(partial_trace(rho, "B").mat, rho_b, atol=1e-12)
    np.testing.assert_allclose(partial_trace(singlet_state(), "A").mat, np.eye(2) / 2, atol=1e-15)
    np.testing.assert_allclose(partial_trace(maximally_mixed((2, 3)), "A").mat, np.eye(2) / 2)
    np.testing.assert_allclose(partial_trace(maximally_mixed((2, 3)), "B").mat, np.eye(3) / 3)


def test_partial_trace_chain(draw_states):
    for mat in draw_states((3, 4), 20):
        rho = DensityMatrix.from_array(mat, (3, 4))
        assert abs(partial_trace(rho, "A").trace() - 1) <= 1e-10
        assert abs(partial_trace(rho, "B").trace() - 1) <= 1e-10


def test_partial_transpose_examples(random_density):
    rho_a, rho_b = random_density(2), random_density(2)
    rho = product_state(rho_a, rho_b)
    np.testing.assert_allclose(partial_transpose(rho, "B"), kron(rho_a, rho_b.T), atol=1e-15)
    np.testing.assert_allclose(herm_eig(partial_transpose(rho, "B")), herm_eig(rho.mat), atol=1e-12)
    np.testing.assert_allclose(herm_eig(partial_transpose(singlet_state(), "B")), [0.5, 0.5, 0.5, -0.5], atol=1e-10)
    np.testing.assert_array_equal(partial_transpose(maximally_mixed((2, 2)), "A"), maximally_mixed((2, 2)).mat)


def test_partial_transpose_involution_and_sides(draw_states):
    dims = SystemDims(2, 3)
    for mat in draw_states(dims.as_tuple(), 20):
        for on in ["A", "B"]:
            twice = ptranspose_arrays(ptranspose_arrays(mat, dims, on), dims, on)
            assert np.array_equal(twice, mat)
        rho = DensityMatrix.from_array(mat, dims)
        np.testing.assert_allclose(herm_eig(partial_transpose(rho, "A")), herm_eig(partial_transpose(rho, "B")), atol=1e-9)


def test_min_eig_and_rank():
    assert min_eig(np.eye(2)) == pytest.approx(1)
    assert min_eig(np.diag([0.7, -0.2])) == pytest.approx(-0.2)
    assert min_eig(partial_transpose(singlet_state(), "B")) == pytest.approx(-0.5)
    assert numerical_rank(np.eye(4) / 4) == 4
    assert numerical_rank(singlet_state().mat) == 1
    assert numerical_rank(diagonal_state([0.5, 0, 0, 0.5], (2, 2)).mat) == 2
    assert numerical_rank(np.zeros((3, 3))) == 0


def test_density_matrix_validation():
    with pytest.raises(InvalidState, match="Trace"):
        DensityMatrix.from_array(np.eye(4) * 0.9 / 4, (2, 2))
    with pytest.raises(InvalidState, match="positive semidefinite"):
        DensityMatrix.from_array(np.diag([0.7, 0.5, -0.1, -0.1]), (2, 2))
    with pytest.raises(NonHermitianInput):
        DensityMatrix.from_array(np.array([[0.5, 0.1], [0.3, 0.5]]), (2, 1))
    with pytest.raises(DimensionMismatch):
        DensityMatrix.from_array(np.eye(4) / 4, (2, 3))
    rho = DensityMatrix.from_array(np.eye(4) * 1.0000001 / 4, (2, 2), trace_tol=1e-6, normalize=True)
    assert rho.trace() == pytest.approx(1, abs=1e-15)
    with pytest.raises(ValueError):
        rho.mat[0, 0] = 1


def test_werner_family():
    for p in [0, 0.3, 1]:
        rho = werner_state(p)
        validated = DensityMatrix.from_array(rho.mat, rho.dims)
        assert min_eig(partial_transpose(validated, "B")) == pytest.approx((1 - 3 * p) / 4, abs=1e-12)
    with pytest.raises(ValueError):
        werner_state(1.5)


def test_local_unitary_preserves_spectra(rng, draw_states):
    dims = SystemDims(2, 3)
    u_a, u_b = haar_unitary(2, rng), haar_unitary(3, rng)
    for mat in draw_states(dims.as_tuple(), 10):
        rho = DensityMatrix.from_array(mat, dims)
        moved = apply_local_unitary(rho, u_a, u_b)
        np.testing.assert_allclose(herm_eig(moved.mat), herm_eig(rho.mat), atol=1e-12)
        np.testing.assert_allclose(herm_eig(partial_trace(moved, "A").mat), herm_eig(partial_trace(rho, "A").mat), atol=1e-12)
