import numpy as np
import pytest

from entangle_atlas.criteria import (
    conditional_q_entropy,
    conditional_renyi_entropy,
    entropy_report,
    log_omega,
    omega_q,
    renyi_entropy,
    tsallis_entropy,
    tsallis_from_renyi,
    tsallis_product,
    von_neumann_entropy,
)
from entangle_atlas.exceptions import InvalidQ, InvalidSubsystem
from entangle_atlas.linalg import herm_eig, maximally_mixed, product_state, pure_state, singlet_state
from entangle_atlas.sampling import sample_simplex

from .conftest import as_state


QS = [0.5, 1.0, 2.0, 3.5]


@pytest.mark.parametrize("q", QS + [np.inf])
def test_pure_spectrum_has_zero_entropy(q):
    spec = np.array([1.0, 0.0, 0.0, 0.0])
    assert tsallis_entropy(spec, q) == pytest.approx(0, abs=1e-15)
    assert renyi_entropy(spec, q) == pytest.approx(0, abs=1e-15)


def test_known_values():
    half = np.array([0.5, 0.5])
    assert tsallis_entropy(half, 2) == pytest.approx(0.5)
    assert renyi_entropy(half, 2) == pytest.approx(np.log(2))
    assert renyi_entropy(half, np.inf) == pytest.approx(np.log(2))
    assert tsallis_entropy(half, np.inf) == 0
    for n in [2, 5, 12]:
        assert von_neumann_entropy(np.full(n, 1 / n)) == pytest.approx(np.log(n))
        assert tsallis_entropy(np.full(n, 1 / n), 1.0) == pytest.approx(np.log(n))


def test_omega_matches_power_sum(rng):
    spec = sample_simplex(6, rng)
    for q in QS:
        assert omega_q(spec, q) == pytest.approx(np.sum(spec**q), rel=1e-12)
        assert log_omega(spec, q) == pytest.approx(np.log(np.sum(spec**q)), rel=1e-12)
    assert omega_q(spec, np.inf) == spec[0]


def test_log_omega_survives_large_q():
    spec = np.array([0.4, 0.3, 0.3])
    assert np.isfinite(log_omega(spec, 1e4))
    assert log_omega(spec, 1e4) == pytest.approx(1e4 * np.log(0.4), rel=1e-12)


def test_entropies_are_continuous_at_q_one(rng):
    spec = sample_simplex(5, rng)
    s1 = von_neumann_entropy(spec)
    for q in [1 - 1e-7, 1 + 1e-7, 1 - 1e-5, 1 + 1e-5]:
        assert tsallis_entropy(spec, q) == pytest.approx(s1, abs=1e-4)
        assert renyi_entropy(spec, q) == pytest.approx(s1, abs=1e-4)
    # both sides of the series window agree
    assert tsallis_entropy(spec, 1 + 0.9e-6) == pytest.approx(tsallis_entropy(spec, 1 + 1.1e-6), abs=1e-6)
    assert renyi_entropy(spec, 1 - 0.9e-6) == pytest.approx(renyi_entropy(spec, 1 - 1.1e-6), abs=1e-6)


def test_tsallis_is_pseudo_additive_on_product_states(random_density):
    rho_a, rho_b = random_density(2), random_density(3)
    joint = herm_eig(product_state(rho_a, rho_b).mat)
    spec_a, spec_b = herm_eig(rho_a), herm_eig(rho_b)
    for q in [0.5, 2.0, 3.0]:
        expected = tsallis_product(tsallis_entropy(spec_a, q), tsallis_entropy(spec_b, q), q)
        assert tsallis_entropy(joint, q) == pytest.approx(expected, abs=1e-9)


def test_tsallis_and_renyi_are_related_monotonically(rng):
    spec = sample_simplex(4, rng, size=10)
    for q in QS:
        np.testing.assert_allclose(tsallis_from_renyi(renyi_entropy(spec, q), q), tsallis_entropy(spec, q), rtol=1e-10)


@pytest.mark.parametrize("q", [0, -1.0, float("nan"), "two", None])
def test_invalid_q(q):
    with pytest.raises(InvalidQ):
        tsallis_entropy(np.array([0.5, 0.5]), q)


def test_singlet_conditional_entropy_is_negative():
    rho = singlet_state()
    assert conditional_q_entropy(rho, 2) == pytest.approx(-1)
    assert conditional_q_entropy(rho, 1) == pytest.approx(-np.log(2))
    assert conditional_renyi_entropy(rho, 2) == pytest.approx(-np.log(2))
    assert conditional_q_entropy(rho, np.inf) == pytest.approx(-np.log(2))
    for q in QS:
        assert conditional_q_entropy(rho, q) == pytest.approx((1 - 2 ** (q - 1)) / (q - 1) if q != 1 else -np.log(2))


def test_product_conditional_entropy_is_the_marginal_entropy():
    rho = product_state(np.diag([0.6, 0.4]), np.diag([0.7, 0.2, 0.1]))
    assert conditional_q_entropy(rho, 2, conditioned_on="B") == pytest.approx(0.48)
    assert conditional_q_entropy(rho, 2, conditioned_on="A") == pytest.approx(0.46)
    with pytest.raises(InvalidSubsystem):
        conditional_q_entropy(rho, 2, conditioned_on="C")


@pytest.mark.parametrize("q", QS + [np.inf])
def test_maximally_mixed_conditional_entropy_is_nonnegative(q):
    rho = maximally_mixed((2, 2))
    assert conditional_q_entropy(rho, q, "A") >= 0
    assert conditional_q_entropy(rho, q, "B") >= 0


def test_tsallis_and_renyi_conditionals_share_sign(draw_states):
    mats = draw_states((2, 3), 200, seed=5)
    for mat in mats:
        rho = as_state(mat, (2, 3))
        for q in [0.5, 2.0, 5.0]:
            tsallis, renyi = conditional_q_entropy(rho, q), conditional_renyi_entropy(rho, q)
            if abs(renyi) > 1e-9:
                assert np.sign(tsallis) == np.sign(renyi)


def test_entropy_report():
    rho = pure_state([1, 0, 0, 1], (2, 2))
    report = entropy_report(rho, np.inf)
    assert report.omega_q_joint == pytest.approx(1)
    assert report.omega_q_a == pytest.approx(0.5)
    assert report.tsallis_joint == 0
    assert report.conditional_a_given_b == pytest.approx(-np.log(2))
    assert report.conditional_b_given_a == pytest.approx(-np.log(2))
    report = entropy_report(rho, 2).to_dict()
    assert report["q"] == 2.0
    assert report["tsallis_b"] == pytest.approx(0.5)
    assert report["renyi_a"] == pytest.approx(np.log(2))
    assert report["conditional_a_given_b"] == pytest.approx(-1)
