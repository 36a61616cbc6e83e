from itertools import product

import numpy as np
import pytest

from algq import commutes, joint_eigenbasis, spectrum
from algq.errors import MalformedInstance
from algq.experiments import (
    KSInstance,
    bundled_uncolorable_instance,
    ks_search,
    single_triple_instance,
    spin1_squared_observables,
)
from algq.experiments.kochen_specker import verify_contextual, verify_noncontextual


def _brute_force_satisfiable(instance):
    # exhaustive oracle over all 2^n value maps
    n = instance.directions.shape[0]
    for bits in product((0, 1), repeat=n):
        if all(
            sum(bits[i] for i in ctx) == len(ctx) - 1 for ctx in instance.contexts
        ):
            return True
    return False


class TestInstanceValidation:
    def test_bundled_instance_loads(self):
        instance = bundled_uncolorable_instance()
        assert instance.directions.shape == (18, 4)
        assert len(instance.contexts) == 9

    def test_bundled_orthogonality(self):
        instance = bundled_uncolorable_instance()
        for ctx in instance.contexts:
            for a in range(len(ctx)):
                for b in range(a + 1, len(ctx)):
                    dot = instance.directions[ctx[a]] @ instance.directions[ctx[b]]
                    assert abs(dot) <= 1e-8

    def test_every_direction_used_twice(self):
        instance = bundled_uncolorable_instance()
        counts = np.zeros(18, dtype=int)
        for ctx in instance.contexts:
            for i in ctx:
                counts[i] += 1
        assert np.all(counts == 2)

    def test_rejects_nonorthogonal_context(self):
        with pytest.raises(MalformedInstance):
            KSInstance(np.array([[1.0, 0, 0], [1.0, 1.0, 0], [0, 0, 1.0]]), ((0, 1, 2),))

    def test_rejects_wrong_context_size(self):
        with pytest.raises(MalformedInstance):
            KSInstance(np.eye(3), ((0, 1),))

    def test_rejects_bad_index(self):
        with pytest.raises(MalformedInstance):
            KSInstance(np.eye(3), ((0, 1, 5),))

    def test_rejects_zero_vector(self):
        with pytest.raises(MalformedInstance):
            KSInstance(np.array([[0.0, 0, 0], [0, 1, 0], [0, 0, 1]]), ((0, 1, 2),))


class TestSearch:
    def test_single_triple_satisfiable(self):
        result = ks_search(single_triple_instance(), "noncontextual")
        assert result.satisfiable
        assert sorted(result.assignment.values()) == [0, 1, 1]
        assert verify_noncontextual(single_triple_instance(), result.assignment)

    def test_bundled_set_unsat(self):
        result = ks_search(bundled_uncolorable_instance(), "noncontextual")
        assert not result.satisfiable
        assert result.assignment is None

    def test_bundled_set_contextual_sat(self):
        instance = bundled_uncolorable_instance()
        result = ks_search(instance, "contextual")
        assert result.satisfiable
        assert verify_contextual(instance, result.assignment)

    def test_contextual_always_sat(self):
        for instance in (single_triple_instance(), bundled_uncolorable_instance()):
            assert ks_search(instance, "contextual").satisfiable

    def test_backtracking_agrees_with_brute_force(self):
        # two small instances, one SAT and one tightly constrained
        sat_instance = KSInstance(
            np.array([[1, 0, 0], [0, 1, 0], [0, 0, 1], [0, 1, 1], [0, 1, -1]], dtype=float),
            ((0, 1, 2), (0, 3, 4)),
        )
        assert ks_search(sat_instance, "noncontextual").satisfiable == _brute_force_satisfiable(
            sat_instance
        )

    def test_noncontextual_sat_implies_contexts_satisfiable(self):
        # sanity implication: a global assignment restricts to each context
        instance = single_triple_instance()
        result = ks_search(instance, "noncontextual")
        assert result.satisfiable
        for ctx in instance.contexts:
            values = [result.assignment[i] for i in ctx]
            assert values.count(0) == 1

    def test_unknown_mode_rejected(self):
        with pytest.raises(ValueError):
            ks_search(single_triple_instance(), "hybrid")


class TestSquaredSpinObservables:
    def test_pairwise_commuting(self):
        sx2, sy2, sz2 = spin1_squared_observables()
        assert commutes(sx2, sy2) and commutes(sy2, sz2) and commutes(sx2, sz2)

    def test_spectra_are_zero_one_one(self):
        for obs in spin1_squared_observables():
            vals = sorted(spectrum(obs).real)
            assert np.allclose(vals, [0.0, 1.0, 1.0], atol=1e-10)

    def test_sum_is_twice_identity(self):
        sx2, sy2, sz2 = spin1_squared_observables()
        total = sx2.entries + sy2.entries + sz2.entries
        assert np.abs(total - 2 * np.eye(3)).max() <= 1e-12

    def test_joint_context_realizes_exactly_one_zero(self):
        # evaluating the squared-spin triple on any character yields {0,1,1}
        from algq import characters, evaluate

        ctx = joint_eigenbasis(list(spin1_squared_observables()))
        for char in characters(ctx):
            values = sorted(
                round(evaluate(char, obs)) for obs in spin1_squared_observables()
            )
            assert values == [0, 1, 1]
