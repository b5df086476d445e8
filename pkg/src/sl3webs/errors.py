"""Exception hierarchy shared by every module."""


class WebsError(ValueError):
    """Base class for all domain errors raised by this package."""


class TableauError(WebsError):
    pass


class DuplicateEntry(TableauError):
    pass


class EntryOutOfRange(TableauError):
    pass


class RowNotIncreasing(TableauError):
    pass


class ColumnNotIncreasing(TableauError):
    pass


class ShapeMismatch(TableauError):
    pass


class EmptyTableau(TableauError):
    pass


class PositionOutOfRange(WebsError):
    pass


class InvalidResultShape(TableauError):
    pass


class NotThreeRow(WebsError):
    pass


class NotAllSources(WebsError):
    pass


class NotIrreducible(WebsError):
    pass


class DomainViolation(WebsError):
    pass


class BoundExceeded(WebsError):
    pass


class ParseError(WebsError):
    """Malformed text input; carries 1-based line and column."""

    def __init__(self, message, line=1, column=1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class UnknownSubcommand(WebsError):
    pass


class UsageError(WebsError):
    """Bad command-line arguments."""
