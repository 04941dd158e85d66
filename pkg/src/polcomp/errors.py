"""Exception hierarchy shared across the package.

The split mirrors how failures should be reported: bad user inputs
(PreconditionError) versus the engine disagreeing with itself
(InternalConsistencyError). The CLI maps them to distinct exit codes.
"""


class PolcompError(Exception):
    """Base class for all package errors."""


class PreconditionError(PolcompError, ValueError):
    """A model precondition or validation check failed on user input."""


class DimensionError(PreconditionError):
    """Vector dimensions do not line up."""


class InternalConsistencyError(PolcompError, RuntimeError):
    """Two independent computations of the same quantity disagree."""
