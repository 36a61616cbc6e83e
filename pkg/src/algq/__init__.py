"""Finite-dimensional algebraic quantum mechanics toolkit.

Observables are elements of a matrix *-algebra, measurement contexts are
maximal commutative subalgebras, single-trial outcomes are per-context
characters, and quantum states are positive normalized functionals.  The
``experiments`` subpackage turns the standard foundational scenarios (CHSH,
Kochen-Specker, two-slit, oscillator correlation functions, singlet pairs)
into reproducible desk-scale computations.
"""

from .algebra import (
    AlgebraElement,
    HermitianObservable,
    Projector,
    commutes,
    hermitian_split,
    involution,
    jordan_product,
    norm,
    spectral_radius,
    spectrum,
)
from .contexts import (
    Character,
    Context,
    characters,
    contains,
    context_from_basis,
    evaluate,
    joint_eigenbasis,
    masa_from_observable,
)
from .elementary import (
    ElementaryState,
    TwoLevelSignField,
    bloch_decompose,
    ground_sign_field,
    is_equivalent,
    time_average_observable,
    two_level_value,
)
from .gns import (
    GNSRepresentation,
    direct_sum,
    gns_representation,
    is_cyclic,
    is_exact,
    is_irreducible,
    represent,
    vector_functional,
)
from .states import (
    EnsembleEstimate,
    ProbabilitySpace,
    QuantumState,
    born_weights,
    expectation,
    is_pure,
    sample_mean,
    sandwich_scalar,
)

__all__ = [
    "AlgebraElement",
    "HermitianObservable",
    "Projector",
    "commutes",
    "hermitian_split",
    "involution",
    "jordan_product",
    "norm",
    "spectral_radius",
    "spectrum",
    "Character",
    "Context",
    "characters",
    "contains",
    "context_from_basis",
    "evaluate",
    "joint_eigenbasis",
    "masa_from_observable",
    "ElementaryState",
    "TwoLevelSignField",
    "bloch_decompose",
    "ground_sign_field",
    "is_equivalent",
    "time_average_observable",
    "two_level_value",
    "GNSRepresentation",
    "direct_sum",
    "gns_representation",
    "is_cyclic",
    "is_exact",
    "is_irreducible",
    "represent",
    "vector_functional",
    "EnsembleEstimate",
    "ProbabilitySpace",
    "QuantumState",
    "born_weights",
    "expectation",
    "is_pure",
    "sample_mean",
    "sandwich_scalar",
]

__version__ = "0.1.0"
