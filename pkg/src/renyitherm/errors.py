"""Exception hierarchy.

Every input-validation failure derives from :class:`ValidationError`, which is
itself a :class:`ValueError`, so callers can catch broadly or narrowly.
"""


class ValidationError(ValueError):
    """An input violates a documented invariant."""

    invariant = "validation"


class EmptyInput(ValidationError):
    invariant = "empty input"


class NonFinite(ValidationError):
    invariant = "non-finite value"


class NegativeWeight(ValidationError):
    invariant = "negative weight"


class NotNormalizable(ValidationError):
    invariant = "not normalizable"


class NotHermitian(ValidationError):
    invariant = "not hermitian"


class NegativeEigenvalue(ValidationError):
    invariant = "negative eigenvalue"


class TraceNotOne(ValidationError):
    invariant = "trace not one"


class DomainError(ValidationError):
    invariant = "function undefined on spectrum"


class NonpositiveTemperature(ValidationError):
    invariant = "nonpositive temperature"


class ZeroProbability(ValidationError):
    invariant = "zero probability"


class DegenerateOrder(ValidationError):
    invariant = "degenerate order"


class ZeroPoint(ValidationError):
    invariant = "zero point"


class InvalidOrder(ValidationError):
    invariant = "invalid order"


class NoConvergence(RuntimeError):
    """The eigensolver exhausted its sweep budget."""
