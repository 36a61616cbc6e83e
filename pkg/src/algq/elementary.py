"""Elementary states: one measurement outcome per context.

An elementary state carries a stabilized context with a fixed character and
lazily samples characters for every other context it is asked about.  Fresh
contexts are drawn with the Born weights of the sampling class, independently
across contexts, so an ensemble of elementary states of one class reproduces
the class's per-context statistics.  Once sampled, a context's character
never changes.

The two-level system admits a closed form: every nontrivial 2x2 observable
has a unique axis on the Bloch sphere, and an elementary state is a sign
field over axes, odd under reflection.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field

import numpy as np

from .algebra import CLUSTER_TOL, HermitianObservable, cluster_eigenvalues
from .contexts import Character, Context, contains, evaluate
from .errors import (
    CharacterContextMismatch,
    ClassInconsistency,
    DegenerateDirection,
    DimensionMismatch,
    NotInContext,
    SamplingInconsistency,
    UnassignedContext,
)
from .states import QuantumState, born_weights

_CONSISTENCY_TOL = 1e-8
_AXIS_TOL = 1e-12
_ROUND_DECIMALS = 9


def _derive_key(*parts) -> int:
    payload = ":".join(str(p) for p in parts).encode()
    return int.from_bytes(hashlib.sha256(payload).digest()[:16], "little")


class ElementaryState:
    """Per-context character assignment with one stabilized context.

    The object is single-owner mutable while it lazily samples; do not share
    one instance across concurrent executors.  Batches of states with
    distinct seeds are safe to process in parallel.

    With ``stable_on_overlap=True``, sampling a fresh context is restricted
    to characters that agree with every already-assigned character on the
    observables the contexts share, so values propagate across overlaps
    (and the trajectory depends on the order contexts are first queried).
    By default contexts are sampled independently, so a shared observable
    may receive different values in two contexts when neither is the
    stabilized one.
    """

    def __init__(
        self,
        stabilized_context: Context,
        stabilized_character: Character,
        class_state: QuantumState,
        seed: int,
        *,
        stable_on_overlap: bool = False,
    ):
        if stabilized_character.context != stabilized_context:
            raise CharacterContextMismatch("character belongs to a different context")
        if class_state.dim != stabilized_context.dim:
            raise DimensionMismatch("class state dimension differs from context")
        weights = born_weights(class_state, stabilized_context).weights
        target = np.zeros(stabilized_context.dim)
        target[stabilized_character.index] = 1.0
        if np.abs(weights - target).max() > _CONSISTENCY_TOL:
            raise ClassInconsistency(
                "class state does not concentrate on the stabilized character"
            )
        self.stabilized_context = stabilized_context
        self.stabilized_character = stabilized_character
        self.class_state = class_state
        self.seed = int(seed)
        self.stable_on_overlap = stable_on_overlap
        self.assignments: dict[str, Character] = {
            stabilized_context.label: stabilized_character
        }

    def is_assigned(self, context: Context) -> bool:
        return context.label in self.assignments

    def character_for(self, context: Context) -> Character:
        """The character assigned to ``context``, sampling it if fresh."""
        assigned = self.assignments.get(context.label)
        if assigned is not None:
            return assigned
        weights = born_weights(self.class_state, context).weights.copy()
        if self.stable_on_overlap:
            mask = np.ones(context.dim, dtype=bool)
            for prior in self.assignments.values():
                compatible = _compatible_indices(prior.context, prior.index, context)
                allowed = np.zeros(context.dim, dtype=bool)
                allowed[compatible] = True
                mask &= allowed
            weights[~mask] = 0.0
            total = weights.sum()
            if total <= 1e-12:
                raise SamplingInconsistency(
                    "no character compatible with the assigned overlaps has weight"
                )
            weights /= total
        gen = np.random.Generator(
            np.random.Philox(key=_derive_key(self.seed, context.label))
        )
        cumulative = np.cumsum(weights)
        cumulative[-1] = 1.0
        index = int(np.searchsorted(cumulative, gen.random(), side="right"))
        character = Character(context, index)
        self.assignments[context.label] = character
        return character

    def value(self, context: Context, observable: HermitianObservable) -> float:
        """The outcome this elementary state gives the observable in the
        context; repeated calls on the same context are identical."""
        if not contains(context, observable):
            raise NotInContext("observable is not diagonal in this context")
        return evaluate(self.character_for(context), observable)


def is_equivalent(a: ElementaryState, b: ElementaryState, context: Context) -> bool:
    """True iff both states have assigned the same character on ``context``."""
    for state in (a, b):
        if not state.is_assigned(context):
            raise UnassignedContext(context.label)
    ca = a.assignments[context.label]
    cb = b.assignments[context.label]
    return ca.index == cb.index


def _compatible_indices(eta: Context, eta_index: int, xi: Context) -> np.ndarray:
    """Indices of ``xi`` lying in the same overlap block as ``eta_index``.

    The observables shared by two contexts are spanned by projectors that
    are simultaneously sums of basis projectors of each; those common blocks
    are the connected components of the bipartite overlap graph.  A character
    multiplicative on the shared algebra must select a vector in the block
    of the stabilized character.
    """
    overlap = np.abs(eta.basis.conj().T @ xi.basis) ** 2
    significant = overlap > 1e-8
    n, m = significant.shape
    eta_seen = np.zeros(n, dtype=bool)
    xi_seen = np.zeros(m, dtype=bool)
    frontier = [("eta", eta_index)]
    eta_seen[eta_index] = True
    while frontier:
        side, idx = frontier.pop()
        if side == "eta":
            for k in np.nonzero(significant[idx])[0]:
                if not xi_seen[k]:
                    xi_seen[k] = True
                    frontier.append(("xi", int(k)))
        else:
            for i in np.nonzero(significant[:, idx])[0]:
                if not eta_seen[i]:
                    eta_seen[i] = True
                    frontier.append(("eta", int(i)))
    return np.nonzero(xi_seen)[0]


def bloch_decompose(observable: HermitianObservable) -> tuple[float, float, np.ndarray]:
    """Decompose a 2x2 observable as r0 * I + r * (axis . sigma).

    Returns ``(r0, r, axis)`` with ``r >= 0`` and ``axis`` a unit 3-vector.
    Raises DegenerateDirection for multiples of the identity (r below
    1e-12), whose axis is undefined.
    """
    if observable.dim != 2:
        raise DimensionMismatch("Bloch decomposition needs a 2x2 observable")
    m = observable.entries
    a, d = m[0, 0].real, m[1, 1].real
    b = m[0, 1]
    r = float(np.sqrt((a - d) ** 2 / 4.0 + (b * b.conjugate()).real))
    r0 = (a + d) / 2.0
    if r < _AXIS_TOL:
        raise DegenerateDirection("observable is a multiple of the identity")
    # With tau_y = [[0, -i], [i, 0]] the upper-right entry is r*(x1 - i*x2),
    # so the second component carries a minus sign.
    axis = np.array(
        [
            (b + b.conjugate()).real / (2.0 * r),
            -((b - b.conjugate()) / 2j).real / r,
            (a - d) / (2.0 * r),
        ]
    )
    return r0, r, axis


def _hemisphere_representative(axis: np.ndarray) -> tuple[np.ndarray, int]:
    """Canonical representative with positive third (then first, then second)
    component, and the sign flipping the input onto it."""
    x1, x2, x3 = float(axis[0]), float(axis[1]), float(axis[2])
    tol = _AXIS_TOL
    if x3 > tol:
        sign = 1
    elif x3 < -tol:
        sign = -1
    elif x1 > tol:
        sign = 1
    elif x1 < -tol:
        sign = -1
    elif x2 > tol:
        sign = 1
    else:
        sign = -1
    rep = np.round(sign * np.asarray(axis, dtype=float), _ROUND_DECIMALS) + 0.0
    return rep, sign


@dataclass(frozen=True)
class TwoLevelSignField:
    """Deterministic odd sign field over Bloch axes.

    ``value(axis)`` is +1 or -1, with ``value(-axis) == -value(axis)``
    exactly.  Without a ``weight_state`` the signs are fair coin flips from a
    seeded counter-based stream.  With one, the sign at each axis is drawn
    with that state's outcome weights for the corresponding two-point
    observable, so an ensemble over ``index`` reproduces the state's
    statistics; in particular the field is forced to -1 on the axis where
    the state gives the +1 outcome probability zero.
    """

    seed: int
    index: int = 0
    weight_state: QuantumState | None = field(default=None)

    def _plus_probability(self, rep: np.ndarray) -> float:
        if self.weight_state is None:
            return 0.5
        unit = rep / np.linalg.norm(rep)
        sx = np.array([[0, 1], [1, 0]], dtype=complex)
        sy = np.array([[0, -1j], [1j, 0]], dtype=complex)
        sz = np.array([[1, 0], [0, -1]], dtype=complex)
        tau = unit[0] * sx + unit[1] * sy + unit[2] * sz
        plus_proj = 0.5 * (np.eye(2, dtype=complex) + tau)
        p = float(np.trace(self.weight_state.rho @ plus_proj).real)
        return min(max(p, 0.0), 1.0)

    def value(self, axis) -> int:
        ax = np.asarray(axis, dtype=float)
        nrm = np.linalg.norm(ax)
        if nrm < _AXIS_TOL:
            raise DegenerateDirection("zero vector has no direction")
        rep, sign = _hemisphere_representative(ax / nrm)
        u = _uniform_at(self.seed, rep, self.index)
        base = 1 if u < self._plus_probability(rep) else -1
        return sign * base

    def ensemble_values(self, axis, n: int) -> np.ndarray:
        """Values of the fields with indices 0..n-1 at one axis.

        Matches ``TwoLevelSignField(seed, index=k).value(axis)`` for each k;
        the vectorized path reads the same counter-based stream.
        """
        ax = np.asarray(axis, dtype=float)
        rep, sign = _hemisphere_representative(ax / np.linalg.norm(ax))
        gen = np.random.Generator(np.random.Philox(key=_derive_key("slf", self.seed, rep.tobytes().hex())))
        u = gen.random(n)
        base = np.where(u < self._plus_probability(rep), 1, -1)
        return sign * base


def _uniform_at(seed: int, rep: np.ndarray, index: int) -> float:
    # Philox advances by counter blocks of four 64-bit words, i.e. four
    # doubles; position ``index`` is block index//4, word index%4 of the
    # same stream the vectorized path reads.
    bits = np.random.Philox(key=_derive_key("slf", seed, rep.tobytes().hex()))
    block, offset = divmod(index, 4)
    if block:
        bits.advance(block)
    gen = np.random.Generator(bits)
    for _ in range(offset):
        gen.random()
    return float(gen.random())


def ground_sign_field(seed: int, index: int = 0, *, excited_energy: float = 1.0) -> TwoLevelSignField:
    """Sign field of the ground class of H = diag(E, -E).

    The ground state concentrates on the second basis vector, so the field
    is -1 on the +z axis with certainty and the ensemble over ``index``
    reproduces ground-state statistics.
    """
    del excited_energy  # the ground projector is the same for every E > 0
    ground = QuantumState(np.diag([0.0, 1.0]).astype(complex))
    return TwoLevelSignField(seed=seed, index=index, weight_state=ground)


def two_level_value(sign_field: TwoLevelSignField, observable: HermitianObservable) -> float:
    """Value the sign field assigns to a 2x2 observable.

    For an observable r0*I + r*(axis . sigma) this is r0 + r*f(axis); the
    result is always a point of the observable's spectrum.  Multiples of the
    identity evaluate to their scalar.
    """
    try:
        r0, r, axis = bloch_decompose(observable)
    except DegenerateDirection:
        return float(observable.entries[0, 0].real)
    return r0 + r * sign_field.value(axis)


def time_average_observable(
    observable: HermitianObservable,
    hamiltonian: HermitianObservable,
    *,
    cluster_tol: float = CLUSTER_TOL,
) -> HermitianObservable:
    """Dephase an observable in the Hamiltonian's eigenbasis.

    Returns the sum of P A P over the spectral projectors P of H, which is
    the long-time average of the Heisenberg evolution of A (in the weak
    sense).  Degenerate eigenspace blocks are kept whole.
    """
    if observable.dim != hamiltonian.dim:
        raise DimensionMismatch("observable and Hamiltonian dims differ")
    vals, vecs = np.linalg.eigh(hamiltonian.entries)
    result = np.zeros_like(observable.entries)
    for cluster in cluster_eigenvalues(vals, rel_tol=cluster_tol):
        block = vecs[:, cluster]
        proj = block @ block.conj().T
        result = result + proj @ observable.entries @ proj
    return HermitianObservable(0.5 * (result + result.conj().T))
