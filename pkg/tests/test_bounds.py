import numpy as np
import pytest

from qsdbounds import (
    Ensemble,
    average_state,
    from_vectors,
    helstrom,
    make_four_state,
    make_three_state,
    pairwise_bound,
    srm_bound,
    srm_povm,
    success_probability,
)
from qsdbounds.bounds import Povm
from qsdbounds.errors import InvalidState, MixedStateMember, WrongMemberCount
from qsdbounds.hermitian import frobenius, matfun, support_projector

from conftest import rand_mixed_state, rand_pure_ensemble


def orthogonal_pair():
    return from_vectors([0.5, 0.5], [[1, 0], [0, 1]])


def identical_pair():
    return from_vectors([0.5, 0.5], [[1, 0], [1, 0]])


class TestSrmPovm:
    def test_orthogonal_pair_gives_projectors(self):
        povm = srm_povm(orthogonal_pair())
        assert np.allclose(povm.elements[0], np.diag([1.0, 0.0]), atol=1e-10)
        assert np.allclose(povm.elements[1], np.diag([0.0, 1.0]), atol=1e-10)

    def test_identical_pair_splits_support(self):
        e = identical_pair()
        povm = srm_povm(e)
        half_support = 0.5 * support_projector(average_state(e))
        for element in povm.elements:
            assert np.allclose(element, half_support, atol=1e-10)

    def test_three_state_construction_matches_direct_arithmetic(self):
        # oracle: build p ρ^{-1/2} ρ_x ρ^{-1/2} with raw numpy calls
        e = make_three_state(np.pi / 4)
        rho = average_state(e)
        w, v = np.linalg.eigh(rho)
        inv_sqrt = (v * np.where(w > 1e-12, 1 / np.sqrt(np.abs(w)), 0.0)) @ v.conj().T
        povm = srm_povm(e)
        for x in range(3):
            direct = e.probs[x] * inv_sqrt @ e.states[x] @ inv_sqrt
            assert frobenius(povm.elements[x] - direct) <= 1e-10

    def test_completeness_on_support(self):
        for theta in np.linspace(0.0, np.pi / 2, 7):
            for variant in ("original", "replaced_psi2"):
                e = make_three_state(theta, variant)
                povm = srm_povm(e)
                assert povm.completeness_residual() <= 1e-8

    def test_completed_sums_to_identity(self):
        e = make_three_state(0.0)  # rank-deficient average state
        povm = srm_povm(e)
        total = povm.completed().sum(axis=0)
        assert frobenius(total - np.eye(3)) <= 1e-8
        # off-support padding cannot change the success probability
        assert success_probability(e, povm.completed()) == pytest.approx(
            success_probability(e, povm.elements), abs=1e-12
        )

    def test_invalid_povm_rejected(self):
        with pytest.raises(InvalidState):
            Povm(np.array([np.diag([0.5, 0.0])]), np.eye(2))
        with pytest.raises(InvalidState):
            Povm(np.array([np.diag([1.5, -0.5]), np.diag([-0.5, 1.5])]), np.eye(2))


class TestSrmBound:
    def test_orthogonal_pair(self):
        assert srm_bound(orthogonal_pair()) == pytest.approx(1.0, abs=1e-12)

    def test_identical_pair(self):
        assert srm_bound(identical_pair()) == pytest.approx(0.5, abs=1e-12)

    def test_four_state_is_half(self):
        for theta in (0.0, 0.8, 1.7, 2 * np.pi):
            assert srm_bound(make_four_state(theta)) == pytest.approx(0.5, abs=1e-9)

    def test_theta_zero_three_state(self):
        # duplicate states share the support weight: value 2/3
        assert srm_bound(make_three_state(0.0)) == pytest.approx(2 / 3, abs=1e-12)

    def test_above_random_guess_floor(self):
        rng = np.random.default_rng(53)
        for _ in range(50):
            n = int(rng.integers(2, 6))
            e = rand_pure_ensemble(rng, int(rng.integers(2, 5)), n)
            assert srm_bound(e) >= 1.0 / n - 1e-9


class TestPairwiseBound:
    def test_orthogonal_pair(self):
        assert pairwise_bound(orthogonal_pair()) == pytest.approx(1.0, abs=1e-12)

    def test_identical_pair(self):
        assert pairwise_bound(identical_pair()) == pytest.approx(0.5, abs=1e-12)

    def test_four_state_is_half(self):
        for theta in (0.3, 1.1, 5.0):
            assert pairwise_bound(make_four_state(theta)) == pytest.approx(0.5, abs=1e-12)

    def test_mixed_member_rejected(self):
        rng = np.random.default_rng(59)
        states = np.array([rand_mixed_state(rng, 2), rand_mixed_state(rng, 2)])
        e = Ensemble(np.array([0.5, 0.5]), states)
        with pytest.raises(MixedStateMember):
            pairwise_bound(e)

    def test_never_exceeds_srm(self):
        rng = np.random.default_rng(61)
        for _ in range(200):
            e = rand_pure_ensemble(rng, int(rng.integers(2, 5)), int(rng.integers(2, 6)))
            assert pairwise_bound(e) <= srm_bound(e) + 1e-9

    def test_matrix_only_pure_members_accepted(self):
        # rank-1 members given as matrices (no stored vectors) still qualify
        e = make_three_state(0.9)
        stripped = Ensemble(e.probs, e.states)
        assert stripped.vectors is None
        assert pairwise_bound(stripped) == pytest.approx(pairwise_bound(e), abs=1e-10)


class TestHelstrom:
    def test_orthogonal_pair(self):
        assert helstrom(orthogonal_pair()) == pytest.approx(1.0, abs=1e-12)

    def test_identical_pair(self):
        assert helstrom(identical_pair()) == pytest.approx(0.5, abs=1e-12)

    def test_zero_plus_pair(self):
        # eigenvalues of (|0><0| - |+><+|)/2 are +-1/(2 sqrt 2), so the
        # optimum is (1 + 1/sqrt 2)/2
        r = 1 / np.sqrt(2)
        e = from_vectors([0.5, 0.5], [[1, 0], [r, r]])
        assert helstrom(e) == pytest.approx(0.8535533905932737, abs=1e-12)

    def test_wrong_member_count(self):
        with pytest.raises(WrongMemberCount):
            helstrom(make_three_state(0.4))


class TestPermutationEquivariance:
    def test_bounds_and_povm_permute(self):
        rng = np.random.default_rng(67)
        for _ in range(20):
            e = rand_pure_ensemble(rng, 3, 4)
            order = rng.permutation(4)
            p = e.permuted(order)
            assert srm_bound(p) == pytest.approx(srm_bound(e), abs=1e-12)
            assert pairwise_bound(p) == pytest.approx(pairwise_bound(e), abs=1e-12)
            povm_e = srm_povm(e).elements
            povm_p = srm_povm(p).elements
            for new_idx, old_idx in enumerate(order):
                assert frobenius(povm_p[new_idx] - povm_e[old_idx]) <= 1e-10
