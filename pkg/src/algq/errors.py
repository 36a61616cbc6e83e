"""Exception types shared across the package."""


class AlgqError(Exception):
    """Base class for all package-specific errors."""


class DimensionMismatch(AlgqError, ValueError):
    """Operands live in matrix algebras of different dimension."""


class NonCommuting(AlgqError, ValueError):
    """A commuting family was required but a pair fails to commute."""


class NotInContext(AlgqError, ValueError):
    """Observable is not diagonal in the context basis."""


class CharacterContextMismatch(AlgqError, ValueError):
    """Character does not belong to the supplied context."""


class ClassInconsistency(AlgqError, ValueError):
    """Sampling class is inconsistent with the stabilized character."""


class UnassignedContext(AlgqError, KeyError):
    """The context has no character assigned yet."""


class DegenerateDirection(AlgqError, ValueError):
    """A 2x2 observable is a multiple of the identity; its axis is undefined."""


class NotRankOne(AlgqError, ValueError):
    """A rank-1 projector was required."""


class ZeroSamples(AlgqError, ValueError):
    """A Monte Carlo estimator was asked for zero samples."""


class SamplingInconsistency(AlgqError, ValueError):
    """Constrained sampling has no outcome of positive weight."""


class MalformedInstance(AlgqError, ValueError):
    """A direction/context instance fails its structural invariants."""


class SlitsOverlap(AlgqError, ValueError):
    """The two slit windows share lattice sites."""


class LatticeTooSmall(AlgqError, ValueError):
    """The position lattice is too coarse for the requested geometry."""
