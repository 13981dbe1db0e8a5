import numpy as np
import pytest

from qsdbounds import (
    Ensemble,
    average_state,
    classical_bound,
    classical_optimum,
    entropic_bound,
    from_vectors,
    make_classical,
    make_four_state,
    measurement_joint,
    mutual_information,
    profile,
    pure_state_bound,
    shannon,
    von_neumann,
)
from qsdbounds.errors import InconsistentInput, InvalidState, NotNormalized

from conftest import rand_ensemble, rand_pure_ensemble, rand_unitary

LOG2_3 = 1.584962500721156


class TestShannon:
    def test_deterministic(self):
        assert shannon([1.0, 0.0]) == 0.0

    def test_uniform_pair(self):
        assert shannon([0.5, 0.5]) == 1.0

    def test_uniform_triple(self):
        assert shannon([1 / 3, 1 / 3, 1 / 3]) == pytest.approx(LOG2_3, abs=1e-12)

    def test_rejects_unnormalized(self):
        with pytest.raises(NotNormalized):
            shannon([0.5, 0.4])

    def test_rejects_negative(self):
        with pytest.raises(NotNormalized):
            shannon([1.5, -0.5])


class TestVonNeumann:
    def test_pure_state(self):
        v = np.array([0.6, 0.8j])
        assert von_neumann(np.outer(v, v.conj())) == pytest.approx(0.0, abs=1e-12)

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_maximally_mixed(self, n):
        assert von_neumann(np.eye(n) / n) == pytest.approx(np.log2(n), abs=1e-12)

    def test_two_thirds_mixture(self):
        rho = (2 / 3) * np.diag([0.0, 0.0, 1.0]) + (1 / 3) * np.diag([0.0, 1.0, 0.0])
        assert von_neumann(rho) == pytest.approx(0.9182958340544896, abs=1e-12)

    def test_rejects_negative_spectrum(self):
        with pytest.raises(InvalidState):
            von_neumann(np.diag([1.5, -0.5]))

    def test_clips_tiny_negatives(self):
        rho = np.diag([1.0 + 5e-11, -5e-11])
        assert von_neumann(rho) == pytest.approx(0.0, abs=1e-8)


class TestProfile:
    def test_orthogonal_pair(self):
        prof = profile(from_vectors([0.5, 0.5], [[1, 0], [0, 1]]))
        assert prof.h_x == pytest.approx(1.0, abs=1e-12)
        assert prof.s_avg == pytest.approx(1.0, abs=1e-12)
        assert prof.holevo == pytest.approx(1.0, abs=1e-12)
        assert prof.cond == pytest.approx(0.0, abs=1e-12)

    def test_identical_pair(self):
        prof = profile(from_vectors([0.5, 0.5], [[1, 0], [1, 0]]))
        assert prof.holevo == pytest.approx(0.0, abs=1e-12)
        assert prof.cond == pytest.approx(1.0, abs=1e-12)

    def test_four_state_family(self):
        for theta in (0.0, 0.9, 2.4):
            prof = profile(make_four_state(theta))
            assert prof.h_x == pytest.approx(2.0, abs=1e-12)
            assert prof.s_avg == pytest.approx(1.0, abs=1e-12)
            assert prof.cond == pytest.approx(1.0, abs=1e-12)

    def test_internal_identities_random(self):
        rng = np.random.default_rng(29)
        for trial in range(50):
            e = rand_ensemble(rng, int(rng.integers(2, 5)), int(rng.integers(2, 6)), trial % 2 == 0)
            prof = profile(e)
            mix = float(np.dot(e.probs, prof.s_members))
            assert prof.holevo == pytest.approx(prof.s_avg - mix, abs=1e-9)
            assert prof.cond == pytest.approx(prof.h_x - prof.holevo, abs=1e-9)
            assert prof.holevo >= -1e-9
            assert prof.holevo <= min(prof.h_x, np.log2(e.dim)) + 1e-9

    def test_unitary_covariance(self):
        rng = np.random.default_rng(31)
        for trial in range(20):
            dim = int(rng.integers(2, 5))
            e = rand_ensemble(rng, dim, int(rng.integers(2, 6)), trial % 2 == 0)
            u = rand_unitary(rng, dim)
            rotated = Ensemble(
                e.probs, np.einsum("ij,xjk,lk->xil", u, e.states, u.conj())
            )
            a, b = profile(e), profile(rotated)
            assert a.h_x == pytest.approx(b.h_x, abs=1e-9)
            assert a.s_avg == pytest.approx(b.s_avg, abs=1e-9)
            assert a.holevo == pytest.approx(b.holevo, abs=1e-9)
            assert a.cond == pytest.approx(b.cond, abs=1e-9)
            assert np.allclose(a.s_members, b.s_members, atol=1e-9)


class TestEntropicBound:
    def test_orthogonal_pair(self):
        assert entropic_bound(from_vectors([0.5, 0.5], [[1, 0], [0, 1]])) == pytest.approx(
            1.0, abs=1e-12
        )

    def test_four_state(self):
        assert entropic_bound(make_four_state(0.7)) == pytest.approx(0.5, abs=1e-12)

    def test_three_state_theta_zero(self):
        from qsdbounds import make_three_state

        # scalar evaluation from the theta=0 spectrum (1/3, 2/3):
        # cond = log2(3) - (log2(3) - 2/3) = 2/3, bound = 2^(-2/3)
        assert entropic_bound(make_three_state(0.0)) == pytest.approx(
            0.6299605249474366, abs=1e-12
        )

    def test_in_unit_interval_random(self):
        rng = np.random.default_rng(37)
        for trial in range(100):
            e = rand_ensemble(rng, int(rng.integers(2, 5)), int(rng.integers(2, 6)), trial % 2 == 0)
            b = entropic_bound(e)
            assert 0.0 < b <= 1.0

    def test_dominates_pure_state_reduction(self):
        # with equal probabilities H(p) = log2 N, so the reduced bound can
        # only be weaker
        rng = np.random.default_rng(41)
        for _ in range(50):
            n = int(rng.integers(2, 6))
            e = rand_pure_ensemble(rng, int(rng.integers(2, 5)), n, equal_probs=True)
            full = entropic_bound(e)
            reduced = pure_state_bound(average_state(e), n)
            assert full >= reduced - 1e-12


class TestPureStateBound:
    def test_maximally_mixed_qubit_four_states(self):
        assert pure_state_bound(np.eye(2) / 2, 4) == pytest.approx(0.5, abs=1e-12)

    def test_pure_density_gives_random_guess_floor(self):
        v = np.array([1.0, 0.0])
        for n in (1, 2, 5):
            assert pure_state_bound(np.outer(v, v), n) == pytest.approx(1.0 / n, abs=1e-12)

    def test_full_rank_forces_orthogonality(self):
        assert pure_state_bound(np.eye(3) / 3, 3) == pytest.approx(1.0, abs=1e-12)

    def test_inconsistent_inputs_rejected(self):
        with pytest.raises(InconsistentInput):
            pure_state_bound(np.eye(4) / 4, 2)

    def test_bad_count_rejected(self):
        with pytest.raises(InconsistentInput):
            pure_state_bound(np.eye(2) / 2, 0)


class TestClassicalBounds:
    def test_perfectly_correlated(self):
        c = make_classical([[0.5, 0.0], [0.0, 0.5]])
        assert classical_bound(c) == pytest.approx(1.0, abs=1e-12)
        assert classical_optimum(c) == pytest.approx(1.0, abs=1e-12)

    def test_independent_uniform(self):
        c = make_classical(np.full((2, 2), 0.25))
        assert classical_bound(c) == pytest.approx(0.5, abs=1e-12)
        assert classical_optimum(c) == pytest.approx(0.5, abs=1e-12)

    def test_worked_joint(self):
        # oracle: H(X|Y) = -sum p(x,y) log2 p(x|y) computed by direct scalar
        # sums = 0.875488750216347; column maxima are 0.4 and 0.3
        c = make_classical([[0.4, 0.1], [0.2, 0.3]])
        assert classical_bound(c) == pytest.approx(0.5450691787846754, abs=1e-12)
        assert classical_optimum(c) == pytest.approx(0.7, abs=1e-15)
        assert classical_optimum(c) >= classical_bound(c)

    def test_zero_probability_column(self):
        c = make_classical([[0.6, 0.0], [0.4, 0.0]])
        assert classical_bound(c) == pytest.approx(2.0 ** -shannon([0.6, 0.4]), abs=1e-12)

    def test_chain_on_random_joints(self):
        rng = np.random.default_rng(43)
        for _ in range(200):
            n, k = int(rng.integers(2, 6)), int(rng.integers(2, 6))
            joint = rng.dirichlet(np.ones(n * k)).reshape(n, k)
            c = make_classical(joint)
            assert classical_optimum(c) >= classical_bound(c) - 1e-12

    def test_mutual_information_worked_joint(self):
        c = make_classical([[0.4, 0.1], [0.2, 0.3]])
        assert mutual_information(c) == pytest.approx(0.12451124978365313, abs=1e-12)


class TestHolevoMeasurementCheck:
    def test_measured_information_never_exceeds_holevo(self):
        rng = np.random.default_rng(47)
        for trial in range(40):
            dim = int(rng.integers(2, 5))
            e = rand_ensemble(rng, dim, int(rng.integers(2, 6)), trial % 2 == 0)
            holevo = profile(e).holevo
            for _ in range(3):
                u = rand_unitary(rng, dim)
                projectors = np.array(
                    [np.outer(u[:, k], u[:, k].conj()) for k in range(dim)]
                )
                measured = mutual_information(measurement_joint(e, projectors))
                assert measured <= holevo + 1e-9
