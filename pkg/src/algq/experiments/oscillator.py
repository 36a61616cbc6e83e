"""Harmonic oscillator correlation functions on a truncated number basis.

Natural units (hbar = m = 1).  Ladder operators are truncated at
``fock_dim`` levels; position at time t evolves freely as
X(t) = (a e^{-iwt} + a+ e^{+iwt}) / sqrt(2w).  Time-ordered ground-level
correlation functions are read off the sandwich of the product between
ground projectors, and the vacuum projector itself arises as the large-r
limit of exp(-r a+ a).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..algebra import AlgebraElement, HermitianObservable, Projector, norm


@dataclass(frozen=True)
class OscillatorConfig:
    omega: float = 1.0
    fock_dim: int = 16
    r: float = 10.0

    def __post_init__(self):
        if self.omega <= 0:
            raise ValueError("omega must be positive")
        if self.fock_dim < 2:
            raise ValueError("fock_dim must be at least 2")
        if self.r <= 0:
            raise ValueError("r must be positive")


def lowering_operator(fock_dim: int) -> AlgebraElement:
    return AlgebraElement(np.diag(np.sqrt(np.arange(1, fock_dim)), 1))


def raising_operator(fock_dim: int) -> AlgebraElement:
    return lowering_operator(fock_dim).star


def number_operator(fock_dim: int) -> HermitianObservable:
    return HermitianObservable(np.diag(np.arange(fock_dim)).astype(complex))


def hamiltonian(config: OscillatorConfig) -> HermitianObservable:
    n = number_operator(config.fock_dim)
    return HermitianObservable(config.omega * (n.entries + 0.5 * np.eye(config.fock_dim)))


def ground_projector(fock_dim: int) -> Projector:
    p = np.zeros((fock_dim, fock_dim), dtype=complex)
    p[0, 0] = 1.0
    return Projector(p)


def oscillator_ground_projector(config: OscillatorConfig) -> AlgebraElement:
    """exp(-r a+ a): diagonal exp(-r n) on the truncated number basis.

    Its distance in norm from the vacuum projector is exactly e^{-r}, so the
    family converges to the ground projector as r grows.
    """
    return AlgebraElement(np.diag(np.exp(-config.r * np.arange(config.fock_dim))))


def damped_product(config: OscillatorConfig, middle: AlgebraElement, r1: float, r2: float) -> AlgebraElement:
    """exp(-r1 a+ a) . middle . exp(-r2 a+ a)."""
    n = np.arange(config.fock_dim)
    left = np.diag(np.exp(-r1 * n))
    right = np.diag(np.exp(-r2 * n))
    return AlgebraElement(left @ middle.entries @ right)


def position_at(config: OscillatorConfig, t: float) -> HermitianObservable:
    a = lowering_operator(config.fock_dim).entries
    phase = np.exp(-1j * config.omega * t)
    m = (a * phase + a.conj().T * phase.conjugate()) / np.sqrt(2.0 * config.omega)
    return HermitianObservable(m)


def time_ordered_positions(config: OscillatorConfig, times) -> AlgebraElement:
    """Product of X(t_i) with later times to the left.

    Coincident times commute (a matrix commutes with itself), so the stable
    descending sort already realizes the symmetric product there.
    """
    order = sorted(range(len(times)), key=lambda i: -float(times[i]))
    product = np.eye(config.fock_dim, dtype=complex)
    for i in order:
        product = product @ position_at(config, float(times[i])).entries
    return AlgebraElement(product)


def green_function(times, config: OscillatorConfig) -> complex:
    """Ground-level time-ordered correlation of positions.

    Defined by p0 . T(X(t1)...X(tn)) . p0 = G . p0; the scalar is read off
    the vacuum diagonal entry, and the sandwich identity is checked.
    """
    product = time_ordered_positions(config, times)
    value = complex(product.entries[0, 0])
    p0 = ground_projector(config.fock_dim).entries
    residual = np.abs(p0 @ product.entries @ p0 - value * p0).max()
    if residual > 1e-10 * max(1.0, abs(value)):  # pragma: no cover
        raise AssertionError(f"sandwich identity violated ({residual:.3e})")
    return value


def oscillator_green(t1: float, t2: float, config: OscillatorConfig) -> complex:
    """Two-point function; equals e^{-iw|t1-t2|} / (2w) up to truncation."""
    return green_function([t1, t2], config)


def two_point_closed_form(t1: float, t2: float, omega: float) -> complex:
    return np.exp(-1j * omega * abs(t1 - t2)) / (2.0 * omega)


def isserlis_four_point(times, config: OscillatorConfig) -> complex:
    """Pairing expansion of the four-point function from two-point factors.

    The generating functional of the correlation functions is Gaussian, so
    the n-point functions reduce to sums over complete pairings.
    """
    t = [float(x) for x in times]
    if len(t) != 4:
        raise ValueError("need exactly four times")
    g = lambda i, j: two_point_closed_form(t[i], t[j], config.omega)
    return g(0, 1) * g(2, 3) + g(0, 2) * g(1, 3) + g(0, 3) * g(1, 2)


def ground_projector_distance(config: OscillatorConfig) -> float:
    """Norm distance between exp(-r a+ a) and the vacuum projector."""
    diff = oscillator_ground_projector(config) - AlgebraElement(
        ground_projector(config.fock_dim).entries
    )
    return norm(diff)
