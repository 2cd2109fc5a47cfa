"""Exception types shared across the package."""


class InvalidArgumentError(ValueError):
    """An argument lies outside an operation's documented domain."""


class InvalidWeightsError(InvalidArgumentError):
    """A weight vector is not nonincreasing or does not end in 0."""


class HypothesisViolationError(ValueError):
    """Inputs violate a formula's standing hypothesis (e.g. genus >= 2)."""


class InternalInconsistencyError(RuntimeError):
    """An exact identity that must always hold failed; indicates a bug."""


class InputError(ValueError):
    """An input document does not match the expected schema."""
