"""Exception hierarchy shared by every module.

The CLI maps these onto exit codes, so each class carries the code it
should produce.
"""


class RicciError(Exception):
    exit_code = 1


class GraphParseError(RicciError):
    """Malformed edge-list line."""

    exit_code = 1

    def __init__(self, lineno, message):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class InputFileError(RicciError):
    """Input file missing or unreadable."""

    exit_code = 1


class GraphValidationError(RicciError):
    """Input parsed but violates the simple-graph invariants."""

    exit_code = 2


class UnknownVertexError(RicciError, KeyError):
    exit_code = 2

    def __init__(self, vertex):
        super().__init__(vertex)
        self.vertex = vertex

    def __str__(self):
        return f"unknown vertex {self.vertex!r}"


class DomainError(RicciError, ValueError):
    """A precondition on the mathematical input does not hold."""

    exit_code = 2


class ResourceError(RicciError):
    """Requested object exceeds a hard size cap."""

    exit_code = 2


class NumericError(RicciError, ArithmeticError):
    exit_code = 3

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class ConsistencyError(RicciError):
    """An internal invariant failed; indicates a bug, not bad input."""

    exit_code = 3
