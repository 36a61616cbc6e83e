"""Two-level system: sign-field elementary states and ergodicity.

With H = diag(E, -E) the ground state is the functional picking the lower
diagonal entry.  Ground-class sign fields are pinned to -1 on the +z axis;
each assigns every observable one of its eigenvalues, the ensemble mean over
many fields reproduces the ground expectation, and the dephased observable
is valued exactly at the ground expectation by every single field (the
ergodic identity, with no sampling involved).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..algebra import HermitianObservable
from ..elementary import (
    bloch_decompose,
    ground_sign_field,
    time_average_observable,
    two_level_value,
)
from ..errors import DegenerateDirection
from ..states import QuantumState, expectation


@dataclass(frozen=True)
class TwoLevelReport:
    seed: int
    n_states: int
    excited_energy: float
    ground_energy_exact: bool
    spectrum_valued: bool
    dephased_max_deviation: float
    ensemble_deviations: tuple[float, ...]
    ensemble_tolerances: tuple[float, ...]

    @property
    def ensemble_ok(self) -> bool:
        return all(
            d <= t for d, t in zip(self.ensemble_deviations, self.ensemble_tolerances)
        )

    @property
    def passed(self) -> bool:
        return (
            self.ground_energy_exact
            and self.spectrum_valued
            and self.dephased_max_deviation <= 1e-12
            and self.ensemble_ok
        )


def _random_observable(gen: np.random.Generator) -> HermitianObservable:
    m = gen.normal(size=(2, 2)) + 1j * gen.normal(size=(2, 2))
    return HermitianObservable(0.5 * (m + m.conj().T))


def two_level_scenario(
    seed: int,
    n_states: int,
    *,
    excited_energy: float = 1.0,
    n_observables: int = 3,
) -> TwoLevelReport:
    """Run the ground-class checks over ``n_states`` sign fields."""
    if n_states < 1:
        raise ValueError("n_states must be >= 1")
    h = HermitianObservable(np.diag([excited_energy, -excited_energy]).astype(complex))
    ground = QuantumState(np.diag([0.0, 1.0]).astype(complex))
    gen = np.random.Generator(np.random.Philox(key=seed & (2**128 - 1)))

    # Every ground-class field values H at -E: the field is pinned on +z.
    field0 = ground_sign_field(seed)
    energies = field0.ensemble_values(np.array([0.0, 0.0, 1.0]), n_states)
    ground_energy_exact = bool(np.all(energies == -1))

    spectrum_valued = True
    checked = min(n_states, 50)
    probes = [_random_observable(gen) for _ in range(5)]
    for idx in range(checked):
        field = ground_sign_field(seed, index=idx)
        for obs in probes:
            val = two_level_value(field, obs)
            eigs = np.linalg.eigvalsh(obs.entries)
            if np.abs(eigs - val).min() > 1e-10:
                spectrum_valued = False

    # Ergodic identity: the dephased observable is valued at the ground
    # expectation by every field, deterministically.
    dephased_dev = 0.0
    for _ in range(100):
        obs = _random_observable(gen)
        averaged = time_average_observable(obs, h)
        value = two_level_value(field0, averaged)
        dephased_dev = max(dephased_dev, abs(value - expectation(ground, obs)))

    deviations, tolerances = [], []
    for _ in range(n_observables):
        obs = _random_observable(gen)
        try:
            r0, r, axis = bloch_decompose(obs)
        except DegenerateDirection:
            deviations.append(0.0)
            tolerances.append(0.0)
            continue
        field = ground_sign_field(seed)
        signs = field.ensemble_values(axis, n_states)
        values = r0 + r * signs
        deviations.append(abs(float(values.mean()) - expectation(ground, obs)))
        spread = float(values.std(ddof=1)) if n_states > 1 else 0.0
        tolerances.append(4.0 * spread / np.sqrt(n_states) + 1e-12)

    return TwoLevelReport(
        seed=seed,
        n_states=n_states,
        excited_energy=excited_energy,
        ground_energy_exact=ground_energy_exact,
        spectrum_valued=spectrum_valued,
        dephased_max_deviation=dephased_dev,
        ensemble_deviations=tuple(deviations),
        ensemble_tolerances=tuple(tolerances),
    )
