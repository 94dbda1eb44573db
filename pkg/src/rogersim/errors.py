"""Typed errors with CLI exit codes."""


class SimError(Exception):
    exit_code = 1


class ValidationError(SimError):
    """A type invariant or config constraint is violated."""

    exit_code = 2


class ParseError(SimError):
    """Config file is malformed."""

    exit_code = 2


class UnknownKeyError(ValidationError):
    """Config contains a key the schema does not define."""


class ExtinctionError(SimError):
    """Every agent died; carries the truncated series."""

    exit_code = 3

    def __init__(self, message, series=None):
        super().__init__(message)
        self.series = series


class DegenerateError(SimError):
    """Closed-form denominator is non-positive."""

    exit_code = 2


class ConvergenceError(SimError):
    """Fixed-point iteration failed to converge."""

    exit_code = 1


class MissingInputError(SimError):
    exit_code = 4
