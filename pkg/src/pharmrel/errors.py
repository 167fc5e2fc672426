"""Exception types shared across the package."""


class InvalidParameterError(ValueError):
    """An input is outside the model's domain (non-positive count, degenerate rate, ...)."""


class EnumerationCapacityError(InvalidParameterError):
    """The configuration has too many components for exhaustive state enumeration."""


class NoCrossingError(ValueError):
    """Two configurations have equal reliability but different fixed costs: no price equalizes profit."""


class DegenerateComparisonError(ValueError):
    """Two configurations have identical reliability and fixed costs: profit is equal at every price."""


class VerificationError(RuntimeError):
    """A cross-check between the closed forms and an independent oracle failed."""
