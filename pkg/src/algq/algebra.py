"""Dense finite-dimensional *-algebra arithmetic.

The abstract algebra of dynamical quantities is realized concretely as the
full matrix algebra M_n(C).  Elements are square complex matrices, the
involution is the conjugate transpose, and the norm is the C* norm computed
from the spectral radius of ``U* U``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch

# Double-precision eigensolvers deliver ~1e-13; 1e-10 absorbs conditioning.
DEFAULT_TOL = 1e-10
# Eigenvalues closer than this (relative) are treated as one eigenspace.
CLUSTER_TOL = 1e-8


def _coerce_square(entries) -> np.ndarray:
    mat = np.array(entries, dtype=complex)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {mat.shape}")
    mat.setflags(write=False)
    return mat


@dataclass(frozen=True, eq=False)
class AlgebraElement:
    """A dynamical quantity: one element of M_n(C).

    Immutable after construction; all operations are pure functions, so
    elements can be shared freely across concurrent executors.
    """

    entries: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "entries", _coerce_square(self.entries))
        self._validate()

    def _validate(self) -> None:
        pass

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    @property
    def star(self) -> "AlgebraElement":
        """The involution (conjugate transpose)."""
        return AlgebraElement(self.entries.conj().T)

    @classmethod
    def identity(cls, dim: int) -> "AlgebraElement":
        return cls(np.eye(dim, dtype=complex))

    @classmethod
    def zero(cls, dim: int) -> "AlgebraElement":
        return cls(np.zeros((dim, dim), dtype=complex))

    def _check_dim(self, other: "AlgebraElement") -> None:
        if self.dim != other.dim:
            raise DimensionMismatch(f"dims {self.dim} and {other.dim} differ")

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check_dim(other)
        return AlgebraElement(self.entries + other.entries)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check_dim(other)
        return AlgebraElement(self.entries - other.entries)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(-self.entries)

    def __mul__(self, scalar: complex) -> "AlgebraElement":
        return AlgebraElement(self.entries * complex(scalar))

    __rmul__ = __mul__

    def __truediv__(self, scalar: complex) -> "AlgebraElement":
        return AlgebraElement(self.entries / complex(scalar))

    def __matmul__(self, other: "AlgebraElement") -> "AlgebraElement":
        """Algebra product (matrix product)."""
        self._check_dim(other)
        return AlgebraElement(self.entries @ other.entries)

    def isclose(self, other: "AlgebraElement", tol: float = DEFAULT_TOL) -> bool:
        self._check_dim(other)
        scale = max(1.0, float(np.abs(self.entries).max(initial=0.0)))
        return bool(np.abs(self.entries - other.entries).max(initial=0.0) <= tol * scale)

    def __repr__(self) -> str:  # pragma: no cover
        return f"{type(self).__name__}(dim={self.dim})"


class HermitianObservable(AlgebraElement):
    """An observable: a Hermitian element of the algebra."""

    def _validate(self) -> None:
        dev = np.abs(self.entries - self.entries.conj().T).max(initial=0.0)
        scale = max(1.0, float(np.abs(self.entries).max(initial=0.0)))
        if dev > DEFAULT_TOL * scale:
            raise ValueError(f"matrix is not Hermitian (deviation {dev:.3e})")


class Projector(HermitianObservable):
    """A Hermitian idempotent of positive rank."""

    def _validate(self) -> None:
        super()._validate()
        m = self.entries
        dev = np.abs(m @ m - m).max(initial=0.0)
        if dev > DEFAULT_TOL * max(1.0, float(np.abs(m).max(initial=0.0))):
            raise ValueError(f"matrix is not idempotent (deviation {dev:.3e})")
        tr = m.trace().real
        if abs(tr - round(tr)) > DEFAULT_TOL * self.dim or round(tr) < 1:
            raise ValueError(f"projector trace {tr} is not a positive integer")

    @property
    def rank(self) -> int:
        return int(round(self.entries.trace().real))


def involution(element: AlgebraElement) -> AlgebraElement:
    """Conjugate transpose of ``element``."""
    return element.star


def is_hermitian(element: AlgebraElement, tol: float = DEFAULT_TOL) -> bool:
    m = element.entries
    scale = max(1.0, float(np.abs(m).max(initial=0.0)))
    return bool(np.abs(m - m.conj().T).max(initial=0.0) <= tol * scale)


def hermitian(entries) -> HermitianObservable:
    """Wrap a matrix as an observable, validating hermiticity."""
    return HermitianObservable(entries)


def projector_onto(vectors) -> Projector:
    """Orthogonal projector onto the span of the given column vectors."""
    v = np.atleast_2d(np.asarray(vectors, dtype=complex))
    if v.shape[0] == 1:
        v = v.T
    q, _ = np.linalg.qr(v)
    return Projector(q @ q.conj().T)


def spectrum(element: AlgebraElement) -> np.ndarray:
    """Eigenvalues with multiplicity, sorted descending by real then
    imaginary part."""
    if is_hermitian(element):
        vals = np.linalg.eigvalsh(element.entries).astype(complex)
    else:
        vals = np.linalg.eigvals(element.entries)
    order = np.lexsort((-vals.imag, -vals.real))
    return vals[order]


def spectral_radius(element: AlgebraElement) -> float:
    return float(np.abs(spectrum(element)).max())


def norm(element: AlgebraElement) -> float:
    """C* norm: sqrt of the spectral radius of ``U* U``."""
    m = element.entries
    gram_eigs = np.linalg.eigvalsh(m.conj().T @ m)
    return float(np.sqrt(max(float(gram_eigs[-1]), 0.0)))


def jordan_product(a: HermitianObservable, b: HermitianObservable) -> HermitianObservable:
    """Symmetric product ((A+B)^2 - A^2 - B^2) / 2 of two observables.

    For matrix algebras this equals (AB + BA) / 2.
    """
    if a.dim != b.dim:
        raise DimensionMismatch(f"dims {a.dim} and {b.dim} differ")
    ma, mb = a.entries, b.entries
    s = ma + mb
    raw = 0.5 * (s @ s - ma @ ma - mb @ mb)
    # Symmetrize away rounding noise so the result validates as Hermitian.
    return HermitianObservable(0.5 * (raw + raw.conj().T))


def hermitian_split(element: AlgebraElement) -> tuple[HermitianObservable, HermitianObservable]:
    """Unique decomposition U = A + iB with A, B Hermitian."""
    m = element.entries
    a = 0.5 * (m + m.conj().T)
    b = (m - m.conj().T) * (-0.5j)
    return HermitianObservable(a), HermitianObservable(b)


def commutes(a: AlgebraElement, b: AlgebraElement, tol: float = CLUSTER_TOL) -> bool:
    """True iff the C* norm of the commutator [a, b] is at most ``tol``."""
    if a.dim != b.dim:
        raise DimensionMismatch(f"dims {a.dim} and {b.dim} differ")
    comm = a.entries @ b.entries - b.entries @ a.entries
    return norm(AlgebraElement(comm)) <= tol


def pauli_matrices() -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """The three Pauli matrices (x, y, z)."""
    sx = np.array([[0, 1], [1, 0]], dtype=complex)
    sy = np.array([[0, -1j], [1j, 0]], dtype=complex)
    sz = np.array([[1, 0], [0, -1]], dtype=complex)
    return sx, sy, sz


def cluster_eigenvalues(values: np.ndarray, rel_tol: float = CLUSTER_TOL) -> list[np.ndarray]:
    """Group sorted real eigenvalues into near-degenerate clusters.

    Returns index arrays into the *ascending-sorted* input; gaps below
    ``rel_tol`` times the overall scale are merged.
    """
    vals = np.asarray(values, dtype=float)
    order = np.argsort(vals)
    sorted_vals = vals[order]
    scale = max(1.0, float(np.abs(sorted_vals).max(initial=0.0)))
    clusters: list[list[int]] = [[int(order[0])]]
    for prev, idx in zip(range(len(vals) - 1), range(1, len(vals))):
        if sorted_vals[idx] - sorted_vals[prev] < rel_tol * scale:
            clusters[-1].append(int(order[idx]))
        else:
            clusters.append([int(order[idx])])
    return [np.array(c, dtype=int) for c in clusters]
