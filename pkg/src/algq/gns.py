"""Gelfand-Naimark-Segal construction for states on M_n.

From a state functional the construction builds the Gram matrix of the
algebra basis under the sesquilinear form (U, V) -> Psi(U* V), quotients by
its null space, and represents each algebra element as left multiplication
on the quotient.  The class of the identity is the cyclic vector, and the
state is recovered as its expectation value.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import AlgebraElement
from .errors import DimensionMismatch
from .states import QuantumState

# Relative threshold separating the Gram null space (the ideal) from the
# representation space; configurable for near-degenerate states.
NULL_SPACE_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class GNSRepresentation:
    """A cyclic representation built from a state on M_n.

    The algebra basis is the family of matrix units E_ij in row-major order;
    ``basis_coeffs`` holds the orthonormalized representative coefficients
    (shape n^2 x rep_dim), ``operator_images`` the images of the matrix
    units (shape n^2 x rep_dim x rep_dim), and ``cyclic_vector`` the class
    of the identity.
    """

    source_dim: int
    rep_dim: int
    basis_coeffs: np.ndarray
    operator_images: np.ndarray
    cyclic_vector: np.ndarray
    gram: np.ndarray

    def image_of_unit(self, i: int, j: int) -> np.ndarray:
        return self.operator_images[i * self.source_dim + j]


def _left_multiplication_coeffs(element: np.ndarray, coeffs: np.ndarray) -> np.ndarray:
    """Coefficients of U * (sum c_kl E_kl) over the matrix units."""
    n = element.shape[0]
    stacked = coeffs.reshape(n, n, -1)
    return np.einsum("ik,kjr->ijr", element, stacked).reshape(n * n, -1)


def gns_representation(state: QuantumState, *, null_tol: float = NULL_SPACE_TOL) -> GNSRepresentation:
    """Build the GNS representation generated by ``state``.

    The Gram matrix G[U, V] = Psi(U* V) over the n^2 matrix units is always
    positive semidefinite; eigenvectors below ``null_tol`` times the largest
    eigenvalue span the ideal and are quotiented away.  ``rep_dim`` is the
    rank of G.
    """
    n = state.dim
    # G[(i,j),(k,l)] = Psi(E_ij* E_kl) = delta_ik * rho[l, j]
    gram = np.kron(np.eye(n, dtype=complex), state.rho.T)
    gram = 0.5 * (gram + gram.conj().T)
    eigvals, eigvecs = np.linalg.eigh(gram)
    threshold = null_tol * max(float(eigvals[-1]), 0.0)
    keep = eigvals > threshold
    rep_dim = int(keep.sum())
    basis_coeffs = eigvecs[:, keep] / np.sqrt(eigvals[keep])

    images = np.empty((n * n, rep_dim, rep_dim), dtype=complex)
    for i in range(n):
        for j in range(n):
            unit = np.zeros((n, n), dtype=complex)
            unit[i, j] = 1.0
            moved = _left_multiplication_coeffs(unit, basis_coeffs)
            images[i * n + j] = basis_coeffs.conj().T @ gram @ moved

    identity_coeffs = np.eye(n, dtype=complex).reshape(n * n)
    cyclic = basis_coeffs.conj().T @ gram @ identity_coeffs
    return GNSRepresentation(
        source_dim=n,
        rep_dim=rep_dim,
        basis_coeffs=basis_coeffs,
        operator_images=images,
        cyclic_vector=cyclic,
        gram=gram,
    )


def represent(rep: GNSRepresentation, element: AlgebraElement) -> np.ndarray:
    """Image of an arbitrary algebra element in the representation."""
    if element.dim != rep.source_dim:
        raise DimensionMismatch(
            f"element dim {element.dim} != algebra dim {rep.source_dim}"
        )
    coeffs = element.entries.reshape(-1)
    return np.tensordot(coeffs, rep.operator_images, axes=(0, 0))


def vector_functional(rep: GNSRepresentation, element: AlgebraElement) -> complex:
    """(cyclic, Pi(element) cyclic): the represented state's expectation."""
    image = represent(rep, element)
    return complex(rep.cyclic_vector.conj() @ image @ rep.cyclic_vector)


def commutant_dimension(rep: GNSRepresentation, *, tol: float = 1e-9) -> int:
    """Dimension of the space of matrices commuting with every image."""
    r = rep.rep_dim
    eye = np.eye(r)
    rows = []
    for image in rep.operator_images:
        rows.append(np.kron(image, eye) - np.kron(eye, image.T))
    system = np.vstack(rows)
    svals = np.linalg.svd(system, compute_uv=False)
    scale = max(float(svals[0]), 1.0)
    return int(np.sum(svals <= tol * scale))


def is_irreducible(rep: GNSRepresentation) -> bool:
    """True iff the commutant of the image algebra is the scalars."""
    return commutant_dimension(rep) == 1


def is_cyclic(rep: GNSRepresentation, *, tol: float = 1e-9) -> bool:
    """True iff the images applied to the cyclic vector span the space."""
    span = np.column_stack([image @ rep.cyclic_vector for image in rep.operator_images])
    if rep.rep_dim == 0:
        return False
    rank = np.linalg.matrix_rank(span, tol=tol * max(1.0, float(np.abs(span).max())))
    return int(rank) == rep.rep_dim


def is_exact(rep: GNSRepresentation, *, tol: float = 1e-9) -> bool:
    """True iff the map element -> image has trivial kernel."""
    n2 = rep.source_dim**2
    flat = rep.operator_images.reshape(n2, -1)
    rank = np.linalg.matrix_rank(flat, tol=tol * max(1.0, float(np.abs(flat).max())))
    return int(rank) == n2


def direct_sum(reps) -> GNSRepresentation:
    """Finite direct sum of representations of the same algebra.

    Stands in for the universal representation at desk scale: summing over
    enough states yields an exact representation.
    """
    reps = list(reps)
    if not reps:
        raise ValueError("need at least one representation")
    n = reps[0].source_dim
    if any(r.source_dim != n for r in reps):
        raise DimensionMismatch("representations are over different algebras")
    total = sum(r.rep_dim for r in reps)
    images = np.zeros((n * n, total, total), dtype=complex)
    cyclic = np.zeros(total, dtype=complex)
    coeffs = np.zeros((n * n, total), dtype=complex)
    offset = 0
    for r in reps:
        end = offset + r.rep_dim
        images[:, offset:end, offset:end] = r.operator_images
        cyclic[offset:end] = r.cyclic_vector / np.sqrt(len(reps))
        coeffs[:, offset:end] = r.basis_coeffs
        offset = end
    return GNSRepresentation(
        source_dim=n,
        rep_dim=total,
        basis_coeffs=coeffs,
        operator_images=images,
        cyclic_vector=cyclic,
        gram=np.zeros((n * n, n * n), dtype=complex),
    )
