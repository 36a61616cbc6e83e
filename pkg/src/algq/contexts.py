"""Measurement contexts: maximal commutative subalgebras and their characters.

A context is stored as an orthonormal joint eigenbasis of its generating
observables.  The diagonal algebra over that basis is maximal commutative in
M_n, so the context has exactly n characters, one per basis vector.  Contexts
are identified by a canonical label that is invariant under basis-vector
phases and permutations; the stored basis itself is kept in canonical order
so that equal labels imply identical bases and comparable character indices.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

import numpy as np

from .algebra import (
    CLUSTER_TOL,
    AlgebraElement,
    HermitianObservable,
    commutes,
    norm,
)
from .errors import DimensionMismatch, NonCommuting, NotInContext

_ROUND_DECIMALS = 9


def _canonical_phase(vec: np.ndarray) -> np.ndarray:
    """Fix the phase so the largest-magnitude component is real positive."""
    mags = np.round(np.abs(vec), _ROUND_DECIMALS)
    idx = int(np.argmax(mags))
    pivot = vec[idx]
    if abs(pivot) == 0.0:
        return vec
    return vec * (pivot.conjugate() / abs(pivot))


def _rounded(mat: np.ndarray) -> np.ndarray:
    # +0.0 normalizes negative zeros so hashes are sign-of-zero independent
    return np.round(mat, _ROUND_DECIMALS) + 0.0


def _canonicalize_basis(basis: np.ndarray) -> np.ndarray:
    """Phase-fix every column, then sort columns by their rounded entries."""
    cols = [_canonical_phase(basis[:, k]) for k in range(basis.shape[1])]
    keys = [
        _rounded(np.column_stack([c.real, c.imag]).ravel()).tobytes() for c in cols
    ]
    order = sorted(range(len(cols)), key=lambda k: keys[k])
    return np.column_stack([cols[k] for k in order])


def _basis_label(basis: np.ndarray) -> str:
    payload = _rounded(np.column_stack([basis.real, basis.imag]))
    return hashlib.sha256(payload.tobytes()).hexdigest()[:16]


@dataclass(frozen=True, eq=False)
class Context:
    """A maximal commutative subalgebra, given by its joint eigenbasis.

    ``basis`` holds the orthonormal eigenvectors as columns, in canonical
    order.  ``generators`` records the observables the context was built
    from; the unit element is always implicitly contained.
    """

    label: str
    basis: np.ndarray
    generators: tuple[HermitianObservable, ...]

    def __post_init__(self):
        b = np.array(self.basis, dtype=complex)
        b.setflags(write=False)
        object.__setattr__(self, "basis", b)

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def vector(self, index: int) -> np.ndarray:
        return self.basis[:, index]

    def basis_projector(self, index: int) -> np.ndarray:
        v = self.basis[:, index]
        return np.outer(v, v.conj())

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Context) and self.label == other.label

    def __hash__(self) -> int:
        return hash(self.label)

    def __repr__(self) -> str:  # pragma: no cover
        return f"Context(dim={self.dim}, label={self.label!r})"


@dataclass(frozen=True)
class Character:
    """One joint eigenvector of a context, as an evaluation functional."""

    context: Context
    index: int

    def __post_init__(self):
        if not 0 <= self.index < self.context.dim:
            raise ValueError(f"character index {self.index} out of range")


def context_from_basis(basis, generators=()) -> Context:
    """Build a context from an orthonormal basis (columns), canonicalizing."""
    b = np.asarray(basis, dtype=complex)
    if b.ndim != 2 or b.shape[0] != b.shape[1]:
        raise ValueError(f"basis must be square, got shape {b.shape}")
    gram_dev = np.abs(b.conj().T @ b - np.eye(b.shape[0])).max()
    if gram_dev > 1e-10:
        raise ValueError(f"basis is not orthonormal (deviation {gram_dev:.3e})")
    canonical = _canonicalize_basis(b)
    return Context(_basis_label(canonical), canonical, tuple(generators))


def _complete_block_canonically(block: np.ndarray) -> np.ndarray:
    """Deterministic orthonormal basis of the subspace spanned by ``block``.

    Projects the standard basis vectors onto the subspace in index order and
    Gram-Schmidts the results, which is reproducible across runs and
    platforms.
    """
    n, k = block.shape
    proj = block @ block.conj().T
    chosen: list[np.ndarray] = []
    for i in range(n):
        cand = proj[:, i].copy()
        for u in chosen:
            cand -= u * (u.conj() @ cand)
        nrm = np.linalg.norm(cand)
        if nrm > 1e-8:
            chosen.append(cand / nrm)
        if len(chosen) == k:
            break
    if len(chosen) != k:  # pragma: no cover - spans imply completion
        raise np.linalg.LinAlgError("failed to complete degenerate eigenspace")
    return np.column_stack(chosen)


def joint_eigenbasis(
    observables,
    *,
    commute_tol: float = CLUSTER_TOL,
    cluster_tol: float = CLUSTER_TOL,
) -> Context:
    """Context whose basis simultaneously diagonalizes the given observables.

    The basis is refined observable by observable: each invariant block is
    diagonalized, near-degenerate eigenvalues (relative gap below
    ``cluster_tol``) are kept together, and any block left degenerate at the
    end is completed canonically so the result is a maximal context.

    Raises NonCommuting if any pair of inputs fails to commute.
    """
    obs = [o if isinstance(o, HermitianObservable) else HermitianObservable(o) for o in observables]
    if not obs:
        raise ValueError("need at least one observable")
    dim = obs[0].dim
    for o in obs:
        if o.dim != dim:
            raise DimensionMismatch("observables live in different algebras")
    for i in range(len(obs)):
        for j in range(i + 1, len(obs)):
            tol = commute_tol * max(1.0, norm(obs[i]) * norm(obs[j]))
            if not commutes(obs[i], obs[j], tol):
                raise NonCommuting(f"observables {i} and {j} do not commute")

    blocks: list[np.ndarray] = [np.eye(dim, dtype=complex)]
    for o in obs:
        refined: list[np.ndarray] = []
        for block in blocks:
            if block.shape[1] == 1:
                refined.append(block)
                continue
            restricted = block.conj().T @ o.entries @ block
            restricted = 0.5 * (restricted + restricted.conj().T)
            vals, vecs = np.linalg.eigh(restricted)
            scale = max(1.0, float(np.abs(vals).max(initial=0.0)))
            start = 0
            for i in range(1, len(vals) + 1):
                if i == len(vals) or vals[i] - vals[i - 1] >= cluster_tol * scale:
                    refined.append(block @ vecs[:, start:i])
                    start = i
        blocks = refined

    columns = [
        _complete_block_canonically(block) if block.shape[1] > 1 else block
        for block in blocks
    ]
    basis = np.column_stack(columns)
    return context_from_basis(basis, generators=tuple(obs))


def masa_from_observable(observable) -> Context:
    """The canonical maximal context generated by one observable.

    If the spectrum is degenerate, each eigenspace is completed with the
    fixed deterministic basis so the result is maximal.
    """
    return joint_eigenbasis([observable])


def characters(context: Context) -> list[Character]:
    """All characters of the context, one per basis vector."""
    return [Character(context, k) for k in range(context.dim)]


def matrix_in_basis(context: Context, element: AlgebraElement) -> np.ndarray:
    if element.dim != context.dim:
        raise DimensionMismatch(f"dims {element.dim} and {context.dim} differ")
    return context.basis.conj().T @ element.entries @ context.basis


def contains(context: Context, element: AlgebraElement, *, tol: float = CLUSTER_TOL) -> bool:
    """True iff ``element`` is diagonal in the context basis.

    Off-diagonal magnitudes are compared against ``tol`` relative to the
    element's norm.
    """
    transformed = matrix_in_basis(context, element)
    off = transformed - np.diag(np.diag(transformed))
    scale = max(norm(element), 1e-12)
    return bool(np.abs(off).max(initial=0.0) <= tol * scale)


def evaluate(character: Character, observable: AlgebraElement, *, tol: float = CLUSTER_TOL) -> float:
    """Value the character assigns to an observable of its context.

    This is the diagonal entry of the observable in the context basis; it is
    real for Hermitian inputs, linear, and multiplicative on the context.
    """
    ctx = character.context
    if not contains(ctx, observable, tol=tol):
        raise NotInContext("observable is not diagonal in this context")
    v = ctx.vector(character.index)
    value = v.conj() @ observable.entries @ v
    return float(value.real)
