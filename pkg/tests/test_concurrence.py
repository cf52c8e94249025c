"""Concurrence oracle: spin flips, pure overlap, Wootters eigenvalue formula."""
import numpy as np
import pytest

from wteleport import (
    DensityMatrix,
    InvalidInput,
    SIGMA_YY,
    StateVector,
    concurrence_mixed,
    concurrence_pure,
    density_from_pure,
    ket,
    spin_flip_mixed,
    spin_flip_pure,
    werner,
)

RT2 = 1.0 / np.sqrt(2.0)


def random_two_qubit_state(rng):
    amps = rng.normal(size=4) + 1j * rng.normal(size=4)
    return StateVector((1, 2), amps / np.linalg.norm(amps))


def random_two_qubit_density(rng, rank=3):
    mat = np.zeros((4, 4), dtype=complex)
    weights = rng.dirichlet(np.ones(rank))
    for w in weights:
        v = rng.normal(size=4) + 1j * rng.normal(size=4)
        v /= np.linalg.norm(v)
        mat += w * np.outer(v, v.conj())
    return DensityMatrix((1, 2), mat)


class TestSpinFlipOperator:
    def test_exact_entries(self):
        expected = np.zeros((4, 4))
        expected[0b11, 0b00] = 1.0
        expected[0b01, 0b10] = -1.0
        expected[0b10, 0b01] = -1.0
        expected[0b00, 0b11] = 1.0
        assert np.array_equal(SIGMA_YY, expected)

    def test_self_inverse(self):
        assert np.array_equal(SIGMA_YY @ SIGMA_YY, np.eye(4))


class TestSpinFlipPure:
    def test_basis_states(self):
        np.testing.assert_allclose(
            spin_flip_pure(ket([0, 0], [1, 2])).amplitudes, ket([1, 1], [1, 2]).amplitudes
        )
        flipped = spin_flip_pure(ket([0, 1], [1, 2]))
        np.testing.assert_allclose(flipped.amplitudes, -ket([1, 0], [1, 2]).amplitudes)

    def test_symmetric_bell_state(self):
        phi_plus = StateVector((1, 2), np.array([RT2, 0, 0, RT2]))
        np.testing.assert_allclose(spin_flip_pure(phi_plus).amplitudes, phi_plus.amplitudes)

    def test_involution_up_to_global_phase(self):
        rng = np.random.default_rng(5)
        for _ in range(25):
            state = random_two_qubit_state(rng)
            twice = spin_flip_pure(spin_flip_pure(state))
            overlap = abs(np.vdot(state.amplitudes, twice.amplitudes))
            assert overlap == pytest.approx(1.0, abs=1e-12)

    def test_preserves_norm(self):
        rng = np.random.default_rng(6)
        state = random_two_qubit_state(rng)
        assert spin_flip_pure(state).is_normalized(1e-12)

    def test_wrong_register_size(self):
        with pytest.raises(InvalidInput):
            spin_flip_pure(ket([0], [1]))


class TestConcurrencePure:
    def test_maximally_entangled(self):
        phi_plus = StateVector((1, 2), np.array([RT2, 0, 0, RT2]))
        assert concurrence_pure(phi_plus) == pytest.approx(1.0, abs=1e-15)

    def test_product_state(self):
        assert concurrence_pure(ket([0, 1], [1, 2])) == 0.0

    def test_one_third_weight(self):
        alpha = np.sqrt(1.0 / 3.0)
        state = StateVector((1, 2), np.array([alpha, 0, 0, np.sqrt(1 - alpha**2)]))
        # equals the closed form 2 alpha sqrt(1 - alpha^2)
        assert concurrence_pure(state) == pytest.approx(2.0 * np.sqrt(2.0) / 3.0, abs=1e-14)

    def test_antidiagonal_pair(self):
        rng = np.random.default_rng(9)
        for _ in range(20):
            a, b = rng.normal(size=2)
            norm = np.hypot(a, b)
            state = StateVector((1, 2), np.array([0, a, b, 0]) / norm)
            assert concurrence_pure(state) == pytest.approx(
                2.0 * abs(a * b) / norm**2, abs=1e-12
            )

    def test_invariant_under_local_phase(self):
        rng = np.random.default_rng(13)
        for _ in range(20):
            state = random_two_qubit_state(rng)
            base = concurrence_pure(state)
            phase = np.exp(1j * rng.uniform(0, 2 * np.pi))
            # phase on qubit 2's |1> component
            amps = state.amplitudes.copy()
            amps[0b01] *= phase
            amps[0b11] *= phase
            assert concurrence_pure(StateVector((1, 2), amps)) == pytest.approx(
                base, abs=1e-10
            )

    def test_unnormalized_rejected(self):
        with pytest.raises(InvalidInput):
            concurrence_pure(StateVector((1, 2), np.array([0.5, 0, 0, 0])))

    def test_wrong_register_size(self):
        with pytest.raises(InvalidInput):
            concurrence_pure(ket([0], [1]))


class TestSpinFlipMixed:
    def test_basis_projector(self):
        rho = density_from_pure(ket([0, 0], [1, 2]))
        flipped = spin_flip_mixed(rho)
        np.testing.assert_allclose(
            flipped.entries, density_from_pure(ket([1, 1], [1, 2])).entries
        )

    def test_maximally_mixed_fixed_point(self):
        rho = DensityMatrix((1, 2), np.eye(4) / 4.0)
        np.testing.assert_allclose(spin_flip_mixed(rho).entries, np.eye(4) / 4.0)

    def test_werner_family_invariant(self):
        for p in np.linspace(0.0, 1.0, 11):
            rho = werner(p)
            np.testing.assert_allclose(spin_flip_mixed(rho).entries, rho.entries, atol=1e-14)

    def test_preserves_trace(self):
        rng = np.random.default_rng(17)
        rho = random_two_qubit_density(rng)
        assert spin_flip_mixed(rho).entries.trace().real == pytest.approx(1.0, abs=1e-12)


class TestConcurrenceMixed:
    def test_pure_bell_state(self):
        assert concurrence_mixed(werner(1.0)) == pytest.approx(1.0, abs=1e-12)

    def test_separability_threshold(self):
        assert concurrence_mixed(werner(1.0 / 3.0)) == 0.0

    def test_werner_mid(self):
        assert concurrence_mixed(werner(0.6)) == pytest.approx(0.4, abs=1e-12)

    def test_werner_grid(self):
        for p in np.linspace(0.0, 1.0, 101):
            expected = max(0.0, (3.0 * p - 1.0) / 2.0)
            assert concurrence_mixed(werner(p)) == pytest.approx(expected, abs=1e-10), p

    def test_matches_pure_formula_on_pure_states(self):
        rng = np.random.default_rng(21)
        for _ in range(25):
            state = random_two_qubit_state(rng)
            assert concurrence_mixed(density_from_pure(state)) == pytest.approx(
                concurrence_pure(state), abs=1e-9
            )

    def test_value_in_unit_interval(self):
        rng = np.random.default_rng(29)
        for _ in range(25):
            value = concurrence_mixed(random_two_qubit_density(rng))
            assert 0.0 <= value <= 1.0

    def test_wrong_register_size(self):
        with pytest.raises(InvalidInput):
            concurrence_mixed(DensityMatrix((1,), np.eye(2) / 2.0))

    def test_zero_sentinel_rejected(self):
        with pytest.raises(InvalidInput):
            concurrence_mixed(DensityMatrix((1, 2), np.zeros((4, 4))))
