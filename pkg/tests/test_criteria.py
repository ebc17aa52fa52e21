import numpy as np
import pytest

from entangle_atlas.criteria import (
    CHAIN_CRITERIA,
    CRIT_TOL,
    check_majorization,
    check_ppt,
    check_q_entropic,
    check_q_entropic_inf,
    check_rank_separable,
    check_reduction,
    evaluate_all,
    evaluate_batch,
)
from entangle_atlas.exceptions import NonHermitianInput
from entangle_atlas.linalg import matrix
from entangle_atlas.linalg import DensityMatrix, SystemDims, kron, maximally_mixed, pure_state, singlet_state, werner_state
from entangle_atlas.sampling import haar_unitary

from .conftest import as_state


CHECKS = [check_ppt, check_reduction, check_majorization, check_q_entropic_inf]


@pytest.mark.parametrize("p, expected", [(0.0, True), (0.3, True), (1 / 3 - 1e-8, True), (1 / 3 + 1e-8, False), (0.35, False), (1.0, False)])
def test_werner_threshold(p, expected):
    rho = werner_state(p)
    assert [check(rho) for check in CHECKS] == [expected] * 4


def test_werner_margins_are_exact():
    for p in [0.0, 0.2, 0.5, 0.9]:
        margins = evaluate_all(werner_state(p)).margins
        for label in CHAIN_CRITERIA:
            assert margins[label] == pytest.approx((1 - 3 * p) / 4, abs=1e-12)


def test_werner_boundary_flags():
    assert evaluate_all(werner_state(1 / 3)).chain_values() == (True,) * 4
    assert set(evaluate_all(werner_state(1 / 3)).boundary_flags) == set(CHAIN_CRITERIA)
    assert evaluate_all(werner_state(1 / 3 - 1e-8)).boundary_flags == frozenset()
    assert evaluate_all(werner_state(0.2)).boundary_flags == frozenset()


def test_werner_half():
    verdict = evaluate_all(werner_state(0.5), q_finite=2.0)
    assert verdict.chain_values() == (False, False, False, False)
    # S_2(A|B) = (1 - 3 p^2) / 2 > 0 at p = 1/2
    assert verdict.q_entropic_finite is True
    assert verdict.distillable is True
    assert verdict.rank_separable is False
    assert verdict.rank == 4
    assert check_q_entropic(werner_state(0.5), 2.0)
    assert not check_q_entropic(werner_state(0.6), 2.0)


def test_werner_low_weight():
    verdict = evaluate_all(werner_state(0.2))
    assert verdict.chain_values() == (True, True, True, True)
    assert verdict.q_entropic_finite is None
    assert verdict.distillable is False
    assert verdict.rank_separable is False


def test_singlet_fails_everything():
    verdict = evaluate_all(singlet_state(), q_finite=2.0)
    assert verdict.chain_values() == (False, False, False, False)
    assert verdict.q_entropic_finite is False
    assert verdict.distillable is True
    assert verdict.rank == 1
    assert not check_rank_separable(singlet_state())


def test_maximally_mixed_passes_everything():
    rho = maximally_mixed((2, 3))
    verdict = evaluate_all(rho, q_finite=0.5)
    assert verdict.chain_values() == (True, True, True, True)
    assert verdict.q_entropic_finite is True
    assert verdict.rank == 6
    assert not verdict.rank_separable
    assert verdict.to_dict()["boundary_flags"] == []


def test_pure_product_is_rank_separable():
    rho = pure_state(np.kron([1, 0], [0, 1, 0]), (2, 3))
    verdict = evaluate_all(rho)
    assert verdict.chain_values() == (True, True, True, True)
    assert verdict.rank_separable
    assert check_rank_separable(rho)
    assert "ppt" in verdict.boundary_flags


@pytest.mark.parametrize("theta", [0.05, 0.3, np.pi / 4])
def test_pure_entangled_state_fails_every_criterion(theta):
    rho = pure_state([np.cos(theta), 0, 0, np.sin(theta)], (2, 2))
    assert evaluate_all(rho).chain_values() == (False, False, False, False)


def test_non_hermitian_input_is_rejected():
    mat = np.eye(4, dtype=np.complex128) / 4
    mat[0, 1] = 1e-6
    rho = DensityMatrix.from_array(mat, (2, 2), validate=False)
    for check in CHECKS + [check_rank_separable, evaluate_all]:
        with pytest.raises(NonHermitianInput):
            check(rho)


def test_batch_accepts_a_single_matrix():
    verdict = evaluate_batch(werner_state(0.2).mat, SystemDims(2, 2))
    assert len(verdict) == 1
    assert verdict.holds("ppt").tolist() == [True]
    assert verdict.labels == ["ppt", "reduction", "majorization", "q_entropic_inf", "rank_separable", "distillable"]


def test_batch_matches_single_state_checks(draw_states):
    dims = SystemDims(2, 3)
    mats = draw_states(dims.as_tuple(), 100, seed=1)
    verdict = evaluate_batch(mats, dims, q_finite=2.0)
    for i, mat in enumerate(mats):
        batch, single = verdict.verdict(i), evaluate_all(as_state(mat, dims), q_finite=2.0)
        assert batch.chain_values() == single.chain_values()
        assert batch.q_entropic_finite == single.q_entropic_finite
        assert batch.rank == single.rank
        for label, value in single.margins.items():
            assert batch.margins[label] == pytest.approx(value, abs=1e-12)


@pytest.mark.parametrize("dims", [(2, 2), (2, 4), (3, 3), (3, 4)])
def test_implication_chain(draw_states, dims):
    dims = SystemDims(*dims)
    verdict = evaluate_batch(draw_states(dims.as_tuple(), 5000, seed=2), dims, q_finite=2.0)
    ppt, reduction = verdict.holds("ppt"), verdict.holds("reduction")
    majorization, q_inf = verdict.holds("majorization"), verdict.holds("q_entropic_inf")
    assert not np.any(ppt & ~reduction)
    assert not np.any(reduction & ~majorization)
    assert not np.any(majorization & ~q_inf)
    assert not np.any(reduction & ~verdict.holds("q_entropic"))
    assert not np.any(verdict.holds("rank_separable") & ~ppt)


@pytest.mark.slow
@pytest.mark.parametrize("dims", [(2, 2), (2, 4), (3, 3), (3, 4)])
def test_implication_chain_large(draw_states, dims):
    dims = SystemDims(*dims)
    for stream_id in range(10):
        verdict = evaluate_batch(draw_states(dims.as_tuple(), 10000, seed=3, stream_id=stream_id), dims, q_finite=2.0)
        ppt, reduction = verdict.holds("ppt"), verdict.holds("reduction")
        assert not np.any(ppt & ~reduction)
        assert not np.any(reduction & ~verdict.holds("q_entropic_inf"))
        assert not np.any(verdict.holds("majorization") & ~verdict.holds("q_entropic_inf"))
        assert not np.any(verdict.holds("rank_separable") & ~ppt)


@pytest.mark.parametrize("dims", [(2, 2), (2, 3), (2, 5)])
def test_ppt_equals_reduction_for_a_qubit(draw_states, dims):
    dims = SystemDims(*dims)
    verdict = evaluate_batch(draw_states(dims.as_tuple(), 5000, seed=4), dims)
    assert np.array_equal(verdict.holds("ppt"), verdict.holds("reduction"))


def test_large_q_approaches_the_limit(draw_states):
    dims = SystemDims(2, 3)
    mats = draw_states(dims.as_tuple(), 2000, seed=5)
    verdict = evaluate_batch(mats, dims, q_finite=1e4)
    # agreement is only guaranteed outside a band of width ~ ln(N) / q around the boundary
    clear = np.abs(verdict.margins["q_entropic_inf"]) >= 1e-3
    assert clear.sum() > 1000
    assert np.array_equal(verdict.holds("q_entropic")[clear], verdict.holds("q_entropic_inf")[clear])


@pytest.mark.parametrize("dims", [(2, 2), (2, 3), (3, 3)])
def test_pure_states_pass_iff_product(rng, dims):
    dims = SystemDims(*dims)
    n = dims.total()
    for _ in range(200):
        psi = haar_unitary(n, rng)[:, 0]
        rho = pure_state(psi, dims)
        verdict = evaluate_all(rho)
        # a Haar random pure state is entangled with probability one
        assert verdict.chain_values() == (False, False, False, False)
    for _ in range(20):
        psi = np.kron(haar_unitary(dims.n_a, rng)[:, 0], haar_unitary(dims.n_b, rng)[:, 0])
        verdict = evaluate_all(pure_state(psi, dims), crit_tol=1e-9)
        assert verdict.chain_values() == (True, True, True, True)


def test_verdicts_are_local_unitary_invariant(rng, draw_states):
    dims = SystemDims(3, 3)
    mats = draw_states(dims.as_tuple(), 500, seed=6)
    v = kron(haar_unitary(3, rng), haar_unitary(3, rng))
    moved = v @ mats @ v.conj().T
    moved = (moved + np.conj(np.swapaxes(moved, -1, -2))) / 2
    before, after = evaluate_batch(mats, dims), evaluate_batch(moved, dims)
    deciding = dict(rank_separable="ppt", distillable="reduction")
    for label in before.labels:
        clear = np.abs(before.margins[deciding.get(label, label)]) > 1e-8
        assert np.array_equal(before.holds(label)[clear], after.holds(label)[clear])
    for label, margin in before.margins.items():
        np.testing.assert_allclose(margin, after.margins[label], atol=1e-10)


def test_crit_tol_widens_the_accepted_set():
    rho = werner_state(1 / 3 + 1e-8)
    assert not evaluate_all(rho).ppt
    assert evaluate_all(rho, crit_tol=1e-6).ppt
    assert CRIT_TOL == 1e-10


@pytest.fixture
def eigensolves(monkeypatch):
    shapes = []
    eigvalsh = matrix._eigvalsh

    def counting(mats):
        shapes.append(mats.shape)
        return eigvalsh(mats)

    monkeypatch.setattr(matrix, "_eigvalsh", counting)
    return shapes


@pytest.mark.parametrize("q_finite", [None, 2.0])
def test_evaluate_all_diagonalizes_each_operator_once(eigensolves, q_finite):
    rho = werner_state(0.2)
    eigensolves.clear()
    evaluate_all(rho, q_finite=q_finite)
    # rho, rho_A, rho_B, the partial transpose and two reduction operators
    assert sorted(eigensolves) == sorted([(1, 4, 4)] * 4 + [(1, 2, 2)] * 2)


@pytest.mark.parametrize("check, expected", [(check_ppt, 1), (check_reduction, 2), (check_q_entropic_inf, 3), (check_rank_separable, 2)])
def test_single_checks_diagonalize_only_what_they_use(eigensolves, check, expected):
    rho = werner_state(0.2)
    eigensolves.clear()
    check(rho)
    assert len(eigensolves) == expected
