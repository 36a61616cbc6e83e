"""Quantum states as positive normalized linear functionals.

States are stored as density matrices; the pairing with observables is trace
duality, which is lossless in finite dimension.  A pure state additionally
carries its rank-1 projector.  Per-context outcome probabilities and seeded
Monte Carlo estimators live here as well.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import AlgebraElement, HermitianObservable, Projector
from .contexts import Character, Context, contains, matrix_in_basis
from .errors import DimensionMismatch, NotInContext, NotRankOne, ZeroSamples

STATE_TOL = 1e-10
PURITY_TOL = 1e-10

# Monte Carlo draws are consumed from a counter-based stream in fixed-size
# blocks, so any partition of the work across executors replays identically.
SAMPLE_BLOCK = 1 << 20


@dataclass(frozen=True, eq=False)
class QuantumState:
    """Positive normalized linear functional on M_n, as a density matrix."""

    rho: np.ndarray
    pure_projector: Projector | None = None

    def __post_init__(self):
        m = np.array(self.rho, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError(f"density matrix must be square, got {m.shape}")
        if np.abs(m - m.conj().T).max() > STATE_TOL:
            raise ValueError("density matrix is not Hermitian")
        tr = m.trace().real
        if abs(tr - 1.0) > STATE_TOL:
            raise ValueError(f"density matrix trace {tr} != 1")
        eigs = np.linalg.eigvalsh(0.5 * (m + m.conj().T))
        if eigs[0] < -STATE_TOL:
            raise ValueError(f"density matrix has negative eigenvalue {eigs[0]}")
        m.setflags(write=False)
        object.__setattr__(self, "rho", m)
        if self.pure_projector is None and eigs[-1] >= 1.0 - PURITY_TOL:
            _, vecs = np.linalg.eigh(0.5 * (m + m.conj().T))
            v = vecs[:, -1]
            object.__setattr__(
                self, "pure_projector", Projector(np.outer(v, v.conj()))
            )

    @property
    def dim(self) -> int:
        return self.rho.shape[0]

    @classmethod
    def from_vector(cls, vector) -> "QuantumState":
        v = np.asarray(vector, dtype=complex).ravel()
        v = v / np.linalg.norm(v)
        return cls(np.outer(v, v.conj()))

    @classmethod
    def from_projector(cls, projector: Projector) -> "QuantumState":
        if projector.rank != 1:
            raise NotRankOne(f"projector has rank {projector.rank}")
        return cls(projector.entries, pure_projector=projector)

    @classmethod
    def maximally_mixed(cls, dim: int) -> "QuantumState":
        return cls(np.eye(dim, dtype=complex) / dim)

    @classmethod
    def mixture(cls, states, weights) -> "QuantumState":
        """Convex combination; the weights are normalized to sum to 1."""
        w = np.asarray(weights, dtype=float)
        if np.any(w < 0) or w.sum() <= 0:
            raise ValueError("mixture weights must be nonnegative with positive sum")
        w = w / w.sum()
        rho = sum(wi * s.rho for wi, s in zip(w, states))
        return cls(rho)

    @classmethod
    def from_character(cls, character: Character) -> "QuantumState":
        """The pure state concentrated on one character of a context."""
        return cls.from_vector(character.context.vector(character.index))

    def __repr__(self) -> str:  # pragma: no cover
        kind = "pure" if self.pure_projector is not None else "mixed"
        return f"QuantumState(dim={self.dim}, {kind})"


@dataclass(frozen=True)
class ProbabilitySpace:
    """Outcome weights a quantum state induces on one context."""

    context: Context
    weights: np.ndarray

    def __post_init__(self):
        w = np.array(self.weights, dtype=float)
        if w.shape != (self.context.dim,):
            raise ValueError("one weight per context basis vector required")
        if np.any(w < 0) or np.any(w > 1) or abs(w.sum() - 1.0) > 1e-12:
            raise ValueError("weights must lie in [0, 1] and sum to 1")
        w.setflags(write=False)
        object.__setattr__(self, "weights", w)


@dataclass(frozen=True)
class EnsembleEstimate:
    """A Monte Carlo mean with its standard error."""

    mean: float
    std_error: float
    n_samples: int
    seed: int

    def __post_init__(self):
        if self.n_samples < 1:
            raise ValueError("n_samples must be >= 1")
        if self.std_error < 0:
            raise ValueError("std_error must be nonnegative")


def sandwich_scalar(projector: Projector, element: AlgebraElement) -> complex:
    """Scalar c with ``p B p = c p`` for a rank-1 projector p.

    Numerically this is trace(p B).  The map is linear in B, nonnegative on
    elements of the form B* B, and maps the identity to 1.
    """
    if projector.rank != 1:
        raise NotRankOne(f"projector has rank {projector.rank}")
    if projector.dim != element.dim:
        raise DimensionMismatch(f"dims {projector.dim} and {element.dim} differ")
    p, b = projector.entries, element.entries
    value = complex(np.trace(p @ b))
    residual = np.abs(p @ b @ p - value * p).max()
    if residual > 1e-8 * max(1.0, float(np.abs(b).max())):  # pragma: no cover
        raise ValueError(f"sandwich identity violated (residual {residual:.3e})")
    return value


def expectation(state: QuantumState, observable: AlgebraElement) -> float:
    """trace(rho A); real for Hermitian observables."""
    if state.dim != observable.dim:
        raise DimensionMismatch(f"dims {state.dim} and {observable.dim} differ")
    value = complex(np.trace(state.rho @ observable.entries))
    scale = max(1.0, float(np.abs(observable.entries).max()))
    if abs(value.imag) > 1e-8 * scale:
        raise ValueError(f"expectation has imaginary part {value.imag:.3e}")
    return float(value.real)


def expectation_functional(state: QuantumState, element: AlgebraElement) -> complex:
    """trace(rho U) for an arbitrary (possibly non-Hermitian) element."""
    if state.dim != element.dim:
        raise DimensionMismatch(f"dims {state.dim} and {element.dim} differ")
    return complex(np.trace(state.rho @ element.entries))


def is_pure(state: QuantumState) -> bool:
    purity = float(np.trace(state.rho @ state.rho).real)
    return purity >= 1.0 - PURITY_TOL


def born_weights(state: QuantumState, context: Context) -> ProbabilitySpace:
    """Outcome probabilities of the context's characters in the state."""
    if state.dim != context.dim:
        raise DimensionMismatch(f"dims {state.dim} and {context.dim} differ")
    raw = np.einsum("ik,ij,jk->k", context.basis.conj(), state.rho, context.basis)
    weights = np.clip(raw.real, 0.0, 1.0)
    total = weights.sum()
    if abs(total - 1.0) > STATE_TOL:
        raise ValueError(f"context weights sum to {total}, not 1")
    return ProbabilitySpace(context, weights / total)


def sample_characters(
    state: QuantumState,
    context: Context,
    n: int,
    seed: int,
    *,
    block: int = SAMPLE_BLOCK,
) -> np.ndarray:
    """Draw ``n`` character indices with the state's context weights.

    The draw consumes a counter-based stream keyed by ``seed``; partitioning
    into blocks reproduces the single-shot stream, so results do not depend
    on how the work is split across executors.
    """
    if n < 1:
        raise ZeroSamples("need at least one sample")
    space = born_weights(state, context)
    cumulative = np.cumsum(space.weights)
    cumulative[-1] = 1.0
    gen = np.random.Generator(np.random.Philox(key=seed & (2**128 - 1)))
    out = np.empty(n, dtype=np.intp)
    done = 0
    while done < n:
        m = min(block, n - done)
        u = gen.random(m)
        out[done : done + m] = np.searchsorted(cumulative, u, side="right")
        done += m
    return out


def sample_mean(
    state: QuantumState,
    context: Context,
    observable: HermitianObservable,
    n: int,
    seed: int,
    *,
    block: int = SAMPLE_BLOCK,
) -> EnsembleEstimate:
    """Monte Carlo estimate of the observable's mean in the state.

    Characters of ``context`` are drawn with their Born weights and the
    observable's character values are averaged; the estimate converges to
    ``expectation(state, observable)`` and is reproducible per seed.
    """
    if not contains(context, observable):
        raise NotInContext("observable is not diagonal in the sampling context")
    indices = sample_characters(state, context, n, seed, block=block)
    values = np.diag(matrix_in_basis(context, observable)).real
    picked = values[indices]
    mean = float(picked.mean())
    std_error = float(picked.std(ddof=1) / np.sqrt(n)) if n > 1 else 0.0
    return EnsembleEstimate(mean=mean, std_error=std_error, n_samples=n, seed=seed)
