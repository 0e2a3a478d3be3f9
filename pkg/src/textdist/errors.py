"""Exception hierarchy shared by the library and the command line."""


class TextDistError(Exception):
    """Base class for all errors raised by textdist."""


class TokenCapError(TextDistError):
    """A text has more tokens than the configured cap."""

    def __init__(self, cap: int, count: int, source: str = ""):
        self.cap = cap
        self.count = count
        self.source = source
        where = f"{source}: " if source else ""
        super().__init__(f"{where}{count} tokens exceed the cap of {cap}")


class DomainError(TextDistError, ValueError):
    """Inputs outside the domain of a distance (empty text, unequal lengths, ...)."""


class TableTooLargeError(TextDistError):
    """Refusal to materialize a position-match table above the cell cap."""


class MatrixFormatError(TextDistError, ValueError):
    """Malformed distance matrix, either in memory or in a CSV file."""
