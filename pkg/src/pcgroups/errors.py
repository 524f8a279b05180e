"""Exception hierarchy shared across the package."""


class PcGroupError(Exception):
    """Base class for all pcgroups errors."""


class ParseError(PcGroupError):
    """Presentation source text is malformed.

    Carries the 1-based line/column where parsing stopped.
    """

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", col {column}" if column is not None else "")
            where = f" ({where})"
        super().__init__(message + where)


class PresentationError(PcGroupError):
    """A structurally invalid presentation (bad indices, orders, duplicates)."""


class BudgetError(PcGroupError):
    """A configured resource limit (collection steps, element count) was hit."""


class PreconditionError(PcGroupError):
    """An operation was called outside its stated domain."""


class InconsistentPresentationError(PcGroupError):
    """A presentation failed the overlap consistency test.

    ``report`` holds the CheckReport with the failing overlaps.
    """

    def __init__(self, message, report=None):
        self.report = report
        super().__init__(message)
