"""Spin-1/2 building blocks shared by the Bell-type scenarios."""

from __future__ import annotations

import numpy as np

from ..algebra import AlgebraElement, HermitianObservable, pauli_matrices
from ..states import QuantumState


def direction_from_polar(theta: float, phi: float = 0.0) -> np.ndarray:
    """Unit 3-vector at polar angle theta from +z, azimuth phi."""
    return np.array(
        [np.sin(theta) * np.cos(phi), np.sin(theta) * np.sin(phi), np.cos(theta)]
    )


def pauli_along(direction) -> HermitianObservable:
    """The traceless involution (direction . sigma) with spectrum {+1, -1}."""
    d = np.asarray(direction, dtype=float)
    d = d / np.linalg.norm(d)
    sx, sy, sz = pauli_matrices()
    return HermitianObservable(d[0] * sx + d[1] * sy + d[2] * sz)


def spin_half_observable(direction) -> HermitianObservable:
    """Spin projection along a direction, with outcomes +1/2 and -1/2."""
    return HermitianObservable(0.5 * pauli_along(direction).entries)


def spin_eigenvector(direction, outcome_sign: int) -> np.ndarray:
    """Eigenvector of (direction . sigma) for eigenvalue +1 or -1.

    The phase is fixed so the largest-magnitude component is real positive,
    making the vector deterministic.
    """
    tau = pauli_along(direction).entries
    vals, vecs = np.linalg.eigh(tau)
    column = 1 if outcome_sign > 0 else 0
    v = vecs[:, column]
    pivot = v[int(np.argmax(np.abs(v)))]
    return v * (pivot.conjugate() / abs(pivot))


def kron_element(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    return AlgebraElement(np.kron(a.entries, b.entries))


def kron_observable(a: HermitianObservable, b: HermitianObservable) -> HermitianObservable:
    return HermitianObservable(np.kron(a.entries, b.entries))


def singlet_vector() -> np.ndarray:
    """The two-spin singlet (|+z,-z> - |-z,+z>) / sqrt(2)."""
    up = np.array([1.0, 0.0], dtype=complex)
    down = np.array([0.0, 1.0], dtype=complex)
    return (np.kron(up, down) - np.kron(down, up)) / np.sqrt(2.0)


def singlet_state() -> QuantumState:
    return QuantumState.from_vector(singlet_vector())


def reduced_first(state: QuantumState) -> QuantumState:
    """Partial trace over the second factor of a two-qubit state."""
    rho = state.rho.reshape(2, 2, 2, 2)
    return QuantumState(np.einsum("ikjk->ij", rho))
