import numpy as np
import pytest

from algq import AlgebraElement, norm
from algq.experiments import OscillatorConfig, green_function, oscillator_green
from algq.experiments.oscillator import (
    damped_product,
    ground_projector,
    ground_projector_distance,
    hamiltonian,
    isserlis_four_point,
    lowering_operator,
    number_operator,
    oscillator_ground_projector,
    position_at,
    raising_operator,
    two_point_closed_form,
)


class TestLadderAlgebra:
    def test_commutation_relation_below_cutoff(self):
        n = 12
        a = lowering_operator(n).entries
        comm = a @ a.conj().T - a.conj().T @ a
        # the relation [a, a+] = 1 holds strictly below the truncation level
        assert np.abs(comm[: n - 1, : n - 1] - np.eye(n - 1)).max() <= 1e-12

    def test_number_operator(self):
        n = 8
        a = lowering_operator(n).entries
        assert np.abs(a.conj().T @ a - number_operator(n).entries).max() <= 1e-12

    def test_hamiltonian_spectrum(self):
        config = OscillatorConfig(omega=2.0, fock_dim=6)
        h = hamiltonian(config)
        expected = 2.0 * (np.arange(6) + 0.5)
        assert np.allclose(np.diag(h.entries).real, expected)


class TestGroundProjectorLimit:
    def test_distance_is_exp_minus_r(self):
        for r in (1.0, 5.0, 10.0):
            config = OscillatorConfig(fock_dim=16, r=r)
            assert abs(ground_projector_distance(config) - np.exp(-r)) <= 1e-12

    def test_damped_ladder_products_vanish(self):
        # damping kills every strictly raising/lowering word as r grows
        config = OscillatorConfig(fock_dim=12, r=8.0)
        a_minus = lowering_operator(config.fock_dim)
        a_plus = raising_operator(config.fock_dim)
        for word in (a_plus, a_minus, a_plus @ a_plus @ a_minus):
            damped = damped_product(config, word, config.r, config.r)
            assert norm(damped) <= np.exp(-config.r)

    def test_damped_hamiltonian_sandwich(self):
        # exp(-r N) H exp(-r N) approaches (omega/2) exp(-2r N)
        config = OscillatorConfig(omega=1.0, fock_dim=12, r=6.0)
        h = hamiltonian(config)
        sandwich = damped_product(config, h, config.r, config.r)
        target = AlgebraElement(
            0.5 * config.omega * np.diag(np.exp(-2 * config.r * np.arange(config.fock_dim)))
        )
        # the residual is omega * n * exp(-2 r n), maximized at n = 1
        assert norm(sandwich - target) <= config.omega * np.exp(-2 * config.r) * (1 + 1e-12)


class TestTwoPointFunction:
    @pytest.mark.parametrize("omega", [0.5, 1.0, 2.0])
    def test_matches_closed_form(self, omega):
        config = OscillatorConfig(omega=omega, fock_dim=16)
        for t1, t2 in ((0.0, 0.0), (0.3, 1.7), (2.5, -1.25), (-0.4, -0.9)):
            value = oscillator_green(t1, t2, config)
            assert abs(value - two_point_closed_form(t1, t2, omega)) <= 1e-10

    def test_equal_times(self):
        config = OscillatorConfig(omega=1.0, fock_dim=16)
        assert oscillator_green(0.7, 0.7, config) == pytest.approx(0.5, abs=1e-12)

    def test_half_period(self):
        config = OscillatorConfig(omega=1.0, fock_dim=16)
        value = oscillator_green(np.pi, 0.0, config)
        assert value.real == pytest.approx(-0.5, abs=1e-10)
        assert abs(value.imag) <= 1e-10

    def test_truncation_stability(self):
        small = OscillatorConfig(omega=1.0, fock_dim=16)
        large = OscillatorConfig(omega=1.0, fock_dim=32)
        for dt in (0.5, 2.0, 10.0):
            assert abs(
                oscillator_green(dt, 0.0, small) - oscillator_green(dt, 0.0, large)
            ) <= 1e-10

    def test_vacuum_oracle(self):
        # direct truncated-basis oracle: <0| X(t1) X(t2) |0> by hand
        config = OscillatorConfig(omega=1.3, fock_dim=10)
        t1, t2 = 1.1, 0.2
        x1 = position_at(config, t1).entries
        x2 = position_at(config, t2).entries
        vacuum = np.zeros(config.fock_dim)
        vacuum[0] = 1.0
        oracle = vacuum @ (x1 @ x2 @ vacuum)
        assert abs(oscillator_green(t1, t2, config) - oracle) <= 1e-12


class TestFourPointFunction:
    def test_isserlis_pairing(self):
        config = OscillatorConfig(omega=1.0, fock_dim=16)
        times = [0.1, 0.9, 0.4, 2.2]
        direct = green_function(times, config)
        pairing = isserlis_four_point(times, config)
        assert abs(direct - pairing) <= 1e-9

    @pytest.mark.parametrize("omega", [0.5, 2.0])
    def test_isserlis_other_frequencies(self, omega):
        config = OscillatorConfig(omega=omega, fock_dim=16)
        times = [-0.3, 1.4, 0.05, 0.8]
        assert abs(green_function(times, config) - isserlis_four_point(times, config)) <= 1e-9

    def test_coincident_times_reduce_to_moment(self):
        config = OscillatorConfig(omega=1.0, fock_dim=16)
        # <0|X^4|0> = 3 / (2 omega)^2
        value = green_function([0.0, 0.0, 0.0, 0.0], config)
        assert value == pytest.approx(0.75, abs=1e-12)


class TestSandwichIdentity:
    def test_ground_sandwich_is_scalar(self):
        config = OscillatorConfig(omega=1.0, fock_dim=12)
        from algq.experiments.oscillator import time_ordered_positions

        product = time_ordered_positions(config, [0.4, 1.2])
        p0 = ground_projector(config.fock_dim).entries
        sandwich = p0 @ product.entries @ p0
        scalar = sandwich[0, 0]
        assert np.abs(sandwich - scalar * p0).max() <= 1e-12
