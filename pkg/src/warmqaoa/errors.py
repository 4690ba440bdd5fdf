"""
Exception hierarchy for warmqaoa.

Configuration and file system errors live next to the code that raises
them (``config.models`` and ``fs.handler``); everything numerical is
defined here so that every sub-package can share it.
"""

from typing import Optional


class WarmQaoaError(Exception):
    """Base class for all errors raised by warmqaoa."""


class InvalidArgumentError(WarmQaoaError, ValueError):
    """Raised when an argument violates an operation's precondition."""


class CapacityError(WarmQaoaError):
    """Raised when a problem is larger than a configured size cap."""


class DegenerateInstanceError(WarmQaoaError):
    """Raised when an instance has equal maximum and minimum cut values."""


class NumericalError(WarmQaoaError):
    """Raised when a solver result fails a requested strictness check."""


class EdgeListParseError(WarmQaoaError):
    """Raised when edge-list text cannot be parsed."""

    def __init__(self, message: str, line_number: Optional[int] = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
