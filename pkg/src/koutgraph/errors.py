"""Exception types shared across the package.

The CLI maps each class to a fixed exit code.
"""


class KoutError(Exception):
    exit_code = 1


class ParameterError(KoutError, ValueError):
    """Invalid argument value or combination."""

    exit_code = 2


class UnsupportedParameterError(ParameterError):
    """Arguments are well-formed but outside the range a bound is valid for."""


class CapacityError(KoutError):
    """Exhaustive algorithm asked to run on a graph that is too large."""

    exit_code = 3


class FormatError(KoutError):
    """Malformed edge-list input."""

    exit_code = 4

    def __init__(self, message, lineno=None):
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
        self.lineno = lineno
