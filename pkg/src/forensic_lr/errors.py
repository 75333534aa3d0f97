"""Exception hierarchy.

Every error raised for bad *data* (as opposed to programming mistakes)
derives from :class:`DataError`, which the command line maps to exit code 3.
"""


class ForensicLRError(Exception):
    """Base class for all package errors."""


class DataError(ForensicLRError, ValueError):
    """The inputs cannot support the requested computation."""


class IncompleteTable(DataError):
    """A computation needs a cell that is still unknown."""


class UndefinedConditional(DataError):
    """The conditioning event has zero count."""


class AxisError(DataError):
    """Event and conditioning event lie on the same axis of the table."""


class IndeterminateRatio(DataError):
    """A ratio of the form 0/0 was requested."""


class IndeterminateProduct(DataError):
    """A product of the form 0 x infinity was requested."""


class WrongUnknownPattern(DataError):
    """Only the not-E / Hd cell may be left unknown for completion."""


class UnconfiguredScale(DataError):
    """The verbal scale has no band covering the likelihood ratio."""


class NoFallacy(DataError):
    """A correction was requested for a finding that has nothing to correct."""


class ParseError(DataError):
    """A case file is not well-formed JSON."""

    def __init__(self, message, *, path=None, line=None, column=None):
        self.path = path
        self.line = line
        self.column = column
        where = ""
        if path is not None:
            where = str(path)
            if line is not None:
                where += f":{line}:{column}"
            where += ": "
        super().__init__(where + message)


class SchemaError(DataError):
    """A case file parsed but violates the schema or a semantic invariant."""

    def __init__(self, violations, *, path=None):
        self.violations = list(violations)
        self.path = path
        head = f"{path}: " if path is not None else ""
        body = "; ".join(self.violations)
        super().__init__(f"{head}invalid case file: {body}")
