"""Exception hierarchy shared by every module."""
from __future__ import annotations


class PCGraphError(Exception):
    """Base class for all library errors."""


class GraphError(PCGraphError, ValueError):
    """Malformed graph input: loops, out-of-range vertices, duplicate pairs."""


class PreconditionError(PCGraphError, ValueError):
    """An operation was called on input that violates its stated precondition."""


class SizeGuardError(PCGraphError, ValueError):
    """An exponential search was asked to run above its desk-scale limit."""


class ParseError(PCGraphError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class TheoremViolation(PCGraphError, AssertionError):
    """A construction produced something its theorem says is impossible.

    This always indicates an implementation bug, never bad input.
    """
