import numpy as np
import pytest

from algq import (
    AlgebraElement,
    QuantumState,
    direct_sum,
    gns_representation,
    is_cyclic,
    is_exact,
    is_irreducible,
    norm,
    represent,
    vector_functional,
)
from algq.gns import GNSRepresentation, commutant_dimension
from algq.states import expectation_functional
from helpers import random_element, random_unit_vector


def _gram_rank_oracle(state):
    # independent rank computation on the raw Gram matrix
    n = state.dim
    units = []
    for i in range(n):
        for j in range(n):
            u = np.zeros((n, n), dtype=complex)
            u[i, j] = 1.0
            units.append(u)
    gram = np.array(
        [
            [np.trace(state.rho @ u.conj().T @ v) for v in units]
            for u in units
        ]
    )
    return np.linalg.matrix_rank(gram, tol=1e-10 * max(1.0, np.abs(gram).max()))


class TestConstruction:
    def test_pure_state_rep_dim(self, rng):
        state = QuantumState.from_vector(random_unit_vector(rng, 2))
        rep = gns_representation(state)
        assert rep.rep_dim == 2 == _gram_rank_oracle(state)

    def test_maximally_mixed_rep_dim(self):
        state = QuantumState.maximally_mixed(2)
        rep = gns_representation(state)
        assert rep.rep_dim == 4 == _gram_rank_oracle(state)

    def test_cyclic_vector_recovers_state(self, rng):
        # the represented identity class must give back the functional
        for state in (
            QuantumState.from_vector(random_unit_vector(rng, 2)),
            QuantumState.maximally_mixed(3),
        ):
            rep = gns_representation(state)
            for _ in range(100):
                element = random_element(rng, state.dim)
                assert abs(
                    vector_functional(rep, element)
                    - expectation_functional(state, element)
                ) <= 1e-10

    def test_gram_positive(self, rng):
        state = QuantumState.from_vector(random_unit_vector(rng, 3))
        rep = gns_representation(state)
        eigs = np.linalg.eigvalsh(rep.gram)
        assert eigs.min() >= -1e-10 * max(eigs.max(), 1.0)

    def test_cyclic_vector_unit_norm(self, rng):
        state = QuantumState.from_vector(random_unit_vector(rng, 3))
        rep = gns_representation(state)
        assert np.linalg.norm(rep.cyclic_vector) == pytest.approx(1.0, abs=1e-10)


class TestHomomorphism:
    def test_linear_multiplicative_star(self, rng):
        state = QuantumState.mixture(
            [QuantumState.from_vector(random_unit_vector(rng, 2)) for _ in range(2)],
            [0.6, 0.4],
        )
        rep = gns_representation(state)
        for _ in range(25):
            u, v = random_element(rng, 2), random_element(rng, 2)
            alpha = complex(rng.normal(), rng.normal())
            left = represent(rep, alpha * u + v)
            right = alpha * represent(rep, u) + represent(rep, v)
            assert np.abs(left - right).max() <= 1e-9
            prod = represent(rep, u @ v)
            assert np.abs(prod - represent(rep, u) @ represent(rep, v)).max() <= 1e-9 * max(
                1.0, np.abs(prod).max()
            )
            star = represent(rep, u.star)
            assert np.abs(star - represent(rep, u).conj().T).max() <= 1e-9

    def test_norm_decreasing(self, rng):
        state = QuantumState.from_vector(random_unit_vector(rng, 3))
        rep = gns_representation(state)
        for _ in range(20):
            u = random_element(rng, 3)
            image_norm = np.linalg.norm(represent(rep, u), 2)
            assert image_norm <= norm(u) + 1e-9


class TestClassification:
    def test_pure_is_irreducible(self, rng):
        for dim in (2, 3):
            state = QuantumState.from_vector(random_unit_vector(rng, dim))
            rep = gns_representation(state)
            assert is_irreducible(rep)

    def test_mixed_is_reducible(self):
        rep = gns_representation(QuantumState.maximally_mixed(2))
        assert not is_irreducible(rep)
        assert commutant_dimension(rep) == 4

    def test_scalar_algebra_rep_is_irreducible(self):
        rep = GNSRepresentation(
            source_dim=1,
            rep_dim=1,
            basis_coeffs=np.eye(1, dtype=complex),
            operator_images=np.ones((1, 1, 1), dtype=complex),
            cyclic_vector=np.ones(1, dtype=complex),
            gram=np.eye(1, dtype=complex),
        )
        assert is_irreducible(rep)

    def test_constructed_reps_are_cyclic(self, rng):
        for state in (
            QuantumState.from_vector(random_unit_vector(rng, 3)),
            QuantumState.maximally_mixed(2),
        ):
            assert is_cyclic(gns_representation(state))

    def test_zeroed_cyclic_vector_is_not_cyclic(self, rng):
        # constructed counterexample: drop the cyclic vector into an
        # invariant complement (the zero vector)
        rep = gns_representation(QuantumState.from_vector(random_unit_vector(rng, 2)))
        broken = GNSRepresentation(
            source_dim=rep.source_dim,
            rep_dim=rep.rep_dim,
            basis_coeffs=rep.basis_coeffs,
            operator_images=rep.operator_images,
            cyclic_vector=np.zeros_like(rep.cyclic_vector),
            gram=rep.gram,
        )
        assert not is_cyclic(broken)

    def test_exactness(self, rng):
        # M_n is simple, so every nonzero representation is exact
        for state in (
            QuantumState.from_vector(random_unit_vector(rng, 2)),
            QuantumState.mixture(
                [
                    QuantumState.from_vector(random_unit_vector(rng, 2))
                    for _ in range(2)
                ],
                [0.5, 0.5],
            ),
        ):
            rep = gns_representation(state)
            n2 = rep.source_dim**2
            flat = rep.operator_images.reshape(n2, -1)
            oracle = np.linalg.matrix_rank(flat, tol=1e-9 * np.abs(flat).max())
            assert is_exact(rep) == (oracle == n2)
            assert is_exact(rep)


class TestDirectSum:
    def test_sum_of_pure_states_is_exact(self, rng):
        reps = [
            gns_representation(QuantumState.from_vector(random_unit_vector(rng, 2)))
            for _ in range(2)
        ]
        combined = direct_sum(reps)
        assert combined.rep_dim == 4
        assert is_exact(combined)

    def test_sum_respects_products(self, rng):
        reps = [
            gns_representation(QuantumState.from_vector(random_unit_vector(rng, 2)))
            for _ in range(2)
        ]
        combined = direct_sum(reps)
        u, v = random_element(rng, 2), random_element(rng, 2)
        prod = represent(combined, u @ v)
        assert np.abs(prod - represent(combined, u) @ represent(combined, v)).max() <= 1e-9 * max(
            1.0, np.abs(prod).max()
        )
