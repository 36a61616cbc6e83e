"""CHSH correlations on the two-spin singlet.

All numbers follow the spin-1/2 normalization with outcomes +-1/2: the
quantum combination reaches 1/sqrt(2) while every local deterministic
strategy stays at or below 1/2.

Analyzer settings vs. directions: the four configuration angles are analyzer
settings; the measurement direction for setting ``s`` lies in the x-z plane
at polar angle ``2 s``, so the angle between two measurement directions is
twice the setting difference.  With this convention the correlation of
settings (s, t) is -cos(2(s - t))/4 and the textbook setting quadruple
(0, pi/8, pi/4, 3pi/8) attains the quantum maximum.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from itertools import product

import numpy as np

from ..algebra import HermitianObservable
from ..contexts import Context, joint_eigenbasis
from ..errors import ZeroSamples
from ..states import expectation, sample_mean
from .spin import (
    direction_from_polar,
    kron_observable,
    singlet_state,
    spin_half_observable,
)

PAPER_SETTINGS = (0.0, np.pi / 4, np.pi / 8, 3 * np.pi / 8)  # a, a', b, b'


@dataclass(frozen=True)
class CHSHConfig:
    """Analyzer settings (radians) plus Monte Carlo parameters."""

    a: float = PAPER_SETTINGS[0]
    a_prime: float = PAPER_SETTINGS[1]
    b: float = PAPER_SETTINGS[2]
    b_prime: float = PAPER_SETTINGS[3]
    n_samples: int = 1_000_000
    seed: int = 0

    def __post_init__(self):
        if self.n_samples < 1:
            raise ValueError("n_samples must be >= 1")

    def pairs(self) -> tuple[tuple[float, float], ...]:
        """Setting pairs in the order (a,b), (a,b'), (a',b), (a',b')."""
        return (
            (self.a, self.b),
            (self.a, self.b_prime),
            (self.a_prime, self.b),
            (self.a_prime, self.b_prime),
        )


@dataclass(frozen=True)
class CHSHResult:
    E_exact: tuple[float, float, float, float]
    N_exact: float
    classical_max: float
    E_sampled: tuple[float, float, float, float] | None = None
    E_std_errors: tuple[float, float, float, float] | None = None
    N_sampled: float | None = None
    N_std_error: float | None = None


def _combination(e: np.ndarray) -> float:
    return float(abs(e[0] - e[1]) + abs(e[2] + e[3]))


def _setting_direction(setting: float) -> np.ndarray:
    return direction_from_polar(2.0 * setting)


def chsh_quantum_correlation(theta: float) -> float:
    """Singlet correlation of two spin measurements an angle ``theta`` apart.

    Evaluated as an expectation on the explicit 4x4 singlet density matrix;
    equals -cos(theta)/4.
    """
    obs = kron_observable(
        spin_half_observable(direction_from_polar(0.0)),
        spin_half_observable(direction_from_polar(theta)),
    )
    return expectation(singlet_state(), obs)


def _pair_context(sa: float, sb: float) -> tuple[Context, HermitianObservable]:
    two = np.eye(2, dtype=complex)
    oa = spin_half_observable(_setting_direction(sa))
    ob = spin_half_observable(_setting_direction(sb))
    a_side = HermitianObservable(np.kron(oa.entries, two))
    b_side = HermitianObservable(np.kron(two, ob.entries))
    context = joint_eigenbasis([a_side, b_side])
    return context, kron_observable(oa, ob)


def _pair_seed(seed: int, tag: str) -> int:
    digest = hashlib.sha256(f"chsh:{seed}:{tag}".encode()).digest()
    return int.from_bytes(digest[:8], "little")


def chsh_exact(config: CHSHConfig) -> CHSHResult:
    """Closed-form CHSH combination at the configured settings."""
    state = singlet_state()
    e = []
    for sa, sb in config.pairs():
        _, observable = _pair_context(sa, sb)
        e.append(expectation(state, observable))
    e = np.array(e)
    return CHSHResult(
        E_exact=tuple(e),
        N_exact=_combination(e),
        classical_max=chsh_classical_bound_exhaustive(),
    )


def chsh_sampled(config: CHSHConfig) -> CHSHResult:
    """Monte Carlo CHSH: four disjoint per-context sample sets.

    Each of the four setting pairs gets its own context, its own outcome
    weights, and its own counter-based stream, mirroring four independent
    experimental runs.  Results are bit-reproducible for a fixed seed
    regardless of how the draws are partitioned.
    """
    if config.n_samples < 1:
        raise ZeroSamples("sampled mode needs n_samples >= 1")
    exact = chsh_exact(config)
    state = singlet_state()
    means, errors = [], []
    for tag, (sa, sb) in zip(("ab", "ab'", "a'b", "a'b'"), config.pairs()):
        context, observable = _pair_context(sa, sb)
        estimate = sample_mean(
            state, context, observable, config.n_samples, _pair_seed(config.seed, tag)
        )
        means.append(estimate.mean)
        errors.append(estimate.std_error)
    means_arr = np.array(means)
    return CHSHResult(
        E_exact=exact.E_exact,
        N_exact=exact.N_exact,
        classical_max=exact.classical_max,
        E_sampled=tuple(means_arr),
        E_std_errors=tuple(errors),
        N_sampled=_combination(means_arr),
        N_std_error=float(np.sqrt(np.sum(np.array(errors) ** 2))),
    )


def chsh_N(config: CHSHConfig, mode: str = "exact") -> CHSHResult:
    if mode == "exact":
        return chsh_exact(config)
    if mode == "sampled":
        return chsh_sampled(config)
    raise ValueError(f"unknown mode {mode!r}")


def local_deterministic_strategies() -> list[tuple[float, float, float, float]]:
    """All 16 assignments of +-1/2 to (A_a, A_a', B_b, B_b')."""
    return [tuple(0.5 * s for s in signs) for signs in product((1, -1), repeat=4)]


def strategy_combination(strategy) -> float:
    """CHSH combination of one deterministic local strategy."""
    aa, aap, bb, bbp = strategy
    e = np.array([aa * bb, aa * bbp, aap * bb, aap * bbp])
    return _combination(e)


def chsh_classical_bound_exhaustive() -> float:
    """Maximum CHSH combination over all local deterministic strategies.

    Convexity makes deterministic strategies sufficient, so this is the
    classical bound; the enumeration yields exactly 1/2.
    """
    return max(strategy_combination(s) for s in local_deterministic_strategies())


def chsh_classical_simulation(
    n: int, seed: int, strategy_weights=None
) -> tuple[float, float]:
    """Single-joint-assignment local model, sampled.

    Per trial one deterministic strategy is drawn (uniformly unless
    ``strategy_weights`` over the 16 strategies is given) and the SAME
    assignment feeds all four correlation estimates.  Returns the sampled
    combination and its propagated standard error; no weighting can push the
    mean beyond 1/2.
    """
    if n < 1:
        raise ZeroSamples("need at least one sample")
    strategies = np.array(local_deterministic_strategies())
    if strategy_weights is None:
        weights = np.full(len(strategies), 1.0 / len(strategies))
    else:
        weights = np.asarray(strategy_weights, dtype=float)
        weights = weights / weights.sum()
    gen = np.random.Generator(np.random.Philox(key=seed & (2**128 - 1)))
    picks = gen.choice(len(strategies), size=n, p=weights)
    outcomes = strategies[picks]  # columns: A_a, A_a', B_b, B_b'
    products = np.column_stack(
        [
            outcomes[:, 0] * outcomes[:, 2],
            outcomes[:, 0] * outcomes[:, 3],
            outcomes[:, 1] * outcomes[:, 2],
            outcomes[:, 1] * outcomes[:, 3],
        ]
    )
    means = products.mean(axis=0)
    if n > 1:
        errs = products.std(axis=0, ddof=1) / np.sqrt(n)
    else:
        errs = np.zeros(4)
    return _combination(means), float(np.sqrt(np.sum(errs**2)))
