"""Exception types raised by the package."""


class SaddlesError(Exception):
    """Base class for all package errors."""


class ParseError(SaddlesError, ValueError):
    """Malformed edge-list input."""

    def __init__(self, message, line=None, source=None):
        self.line = line
        self.source = source
        where = ""
        if source is not None:
            where += f"{source}:"
        if line is not None:
            where += f"{line}: "
        elif where:
            where += " "
        super().__init__(where + message)


class InvalidInputError(SaddlesError, ValueError):
    """Input that parses but cannot form a valid graph."""


class InvalidParameterError(SaddlesError, ValueError):
    """A parameter outside its allowed range."""


class ModelViolationError(SaddlesError, RuntimeError):
    """A query that the active query model does not permit.

    This signals a programming error in the caller, not a recoverable
    condition.
    """


class ContractViolationError(SaddlesError, IndexError):
    """A query with an argument outside its contract (e.g. bad vertex id)."""
