"""Value assignments on orthogonal direction sets.

Each context is a complete orthogonal basis of directions.  A noncontextual
assignment gives every direction a single {0, 1} value with exactly one 0
per context (for spin-1 triples this is the familiar squared-spin pattern
{0, 1, 1}); a contextual assignment is free to revalue a direction per
context.  The bundled 18-direction, 9-context set in four dimensions admits
no noncontextual assignment, which exhaustive backtracking confirms, while
the contextual relaxation is trivially satisfiable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

import numpy as np

from ..algebra import HermitianObservable
from ..errors import MalformedInstance

ORTHO_TOL = 1e-8


@dataclass(frozen=True)
class KSInstance:
    """Unit directions plus contexts of mutually orthogonal index tuples."""

    directions: np.ndarray
    contexts: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        dirs = np.array(self.directions, dtype=float)
        if dirs.ndim != 2 or dirs.shape[0] == 0:
            raise MalformedInstance("directions must be a nonempty 2-d array")
        norms = np.linalg.norm(dirs, axis=1)
        if np.any(norms < 1e-12):
            raise MalformedInstance("zero direction vector")
        dirs = dirs / norms[:, None]
        dirs.setflags(write=False)
        object.__setattr__(self, "directions", dirs)
        ctxs = tuple(tuple(int(i) for i in ctx) for ctx in self.contexts)
        object.__setattr__(self, "contexts", ctxs)
        dim = dirs.shape[1]
        count = dirs.shape[0]
        for ctx in ctxs:
            if len(ctx) != dim:
                raise MalformedInstance(
                    f"context {ctx} must list {dim} directions in dimension {dim}"
                )
            if len(set(ctx)) != len(ctx):
                raise MalformedInstance(f"context {ctx} repeats a direction")
            if any(i < 0 or i >= count for i in ctx):
                raise MalformedInstance(f"context {ctx} has an index out of range")
            for pos, i in enumerate(ctx):
                for j in ctx[pos + 1 :]:
                    if abs(float(dirs[i] @ dirs[j])) > ORTHO_TOL:
                        raise MalformedInstance(
                            f"directions {i} and {j} in context {ctx} are not orthogonal"
                        )

    @property
    def dim(self) -> int:
        return self.directions.shape[1]

    @classmethod
    def from_dict(cls, payload: dict) -> "KSInstance":
        try:
            return cls(np.array(payload["directions"], dtype=float), tuple(map(tuple, payload["contexts"])))
        except KeyError as missing:
            raise MalformedInstance(f"instance file lacks key {missing}") from None

    @classmethod
    def from_json(cls, path) -> "KSInstance":
        return cls.from_dict(json.loads(Path(path).read_text()))


@dataclass(frozen=True)
class KSSearchResult:
    mode: str
    satisfiable: bool
    # noncontextual: direction index -> value; contextual: (context, member) -> value
    assignment: dict | None


def single_triple_instance() -> KSInstance:
    """Three orthogonal axes: the smallest satisfiable instance."""
    return KSInstance(np.eye(3), ((0, 1, 2),))


def bundled_uncolorable_instance() -> KSInstance:
    """The packaged 18-direction, 9-context four-dimensional set."""
    text = resources.files("algq.data").joinpath("ks_18_directions.json").read_text()
    return KSInstance.from_dict(json.loads(text))


def verify_noncontextual(instance: KSInstance, assignment: dict) -> bool:
    for ctx in instance.contexts:
        values = [assignment[i] for i in ctx]
        if sum(values) != len(ctx) - 1:
            return False
    return True


def verify_contextual(instance: KSInstance, assignment: dict) -> bool:
    for c, ctx in enumerate(instance.contexts):
        values = [assignment[(c, i)] for i in ctx]
        if sum(values) != len(ctx) - 1:
            return False
    return True


def _noncontextual_search(instance: KSInstance) -> dict | None:
    contexts = instance.contexts
    count = instance.directions.shape[0]
    membership: list[list[int]] = [[] for _ in range(count)]
    for c, ctx in enumerate(contexts):
        for i in ctx:
            membership[i].append(c)
    values: list[int | None] = [None] * count

    def context_ok(c: int) -> bool:
        zeros = 0
        unset = 0
        for i in contexts[c]:
            v = values[i]
            if v is None:
                unset += 1
            elif v == 0:
                zeros += 1
        if zeros > 1:
            return False
        if unset == 0 and zeros != 1:
            return False
        return True

    def extend(direction: int) -> bool:
        if direction == count:
            return True
        for candidate in (1, 0):
            values[direction] = candidate
            if all(context_ok(c) for c in membership[direction]) and extend(direction + 1):
                return True
        values[direction] = None
        return False

    if extend(0):
        return {i: int(v) for i, v in enumerate(values)}
    return None


def _contextual_witness(instance: KSInstance) -> dict:
    witness: dict = {}
    for c, ctx in enumerate(instance.contexts):
        for pos, i in enumerate(ctx):
            witness[(c, i)] = 0 if pos == 0 else 1
    return witness


def ks_search(instance: KSInstance, mode: str = "noncontextual") -> KSSearchResult:
    """Search for a value assignment on the instance.

    ``noncontextual`` backtracks over single per-direction values and may
    return UNSAT; ``contextual`` assigns per (context, direction) pair
    independently and always succeeds.
    """
    if mode == "noncontextual":
        assignment = _noncontextual_search(instance)
        if assignment is not None and not verify_noncontextual(instance, assignment):
            raise AssertionError("search returned an invalid assignment")
        return KSSearchResult("noncontextual", assignment is not None, assignment)
    if mode == "contextual":
        witness = _contextual_witness(instance)
        if not verify_contextual(instance, witness):  # pragma: no cover
            raise AssertionError("contextual witness construction failed")
        return KSSearchResult("contextual", True, witness)
    raise ValueError(f"unknown mode {mode!r}")


def spin1_squared_observables() -> tuple[HermitianObservable, HermitianObservable, HermitianObservable]:
    """Squared spin-1 projections along x, y, z.

    They commute pairwise, sum to twice the identity, and each has spectrum
    {0, 1, 1}: measuring the triple realizes the one-zero-per-context rule.
    """
    sqrt2 = np.sqrt(2.0)
    sx = np.array([[0, 1, 0], [1, 0, 1], [0, 1, 0]], dtype=complex) / sqrt2
    sy = np.array([[0, -1j, 0], [1j, 0, -1j], [0, 1j, 0]], dtype=complex) / sqrt2
    sz = np.diag([1.0, 0.0, -1.0]).astype(complex)
    return (
        HermitianObservable(sx @ sx),
        HermitianObservable(sy @ sy),
        HermitianObservable(sz @ sz),
    )
