"""Exception types shared across the package."""


class CircuitLabError(Exception):
    """Base class for all errors raised by this package."""


class NotACircuit(CircuitLabError):
    """A vector offered as a circuit direction failed the circuit test."""


class NoStep(CircuitLabError):
    """The maximal step length in the given direction is zero."""


class Unbounded(CircuitLabError):
    """No constraint bounds movement in the given direction."""


class BudgetExceeded(CircuitLabError):
    """An enumeration hit its work budget before finishing."""


class IncompleteDescription(CircuitLabError):
    """The operation needs a complete constraint description but got a partial one."""


class ConstructionFailed(CircuitLabError):
    """A walk construction produced a step that failed validation."""


class InvariantViolated(CircuitLabError):
    """An internal invariant of a walk construction did not hold."""


class DepthLimit(CircuitLabError):
    """A distance search exhausted its depth limit without resolving."""
