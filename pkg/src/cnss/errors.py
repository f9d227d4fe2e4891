class CNSSError(Exception):
    """Base class for every error raised by the toolkit."""


class FieldMismatchError(CNSSError):
    pass


class ArityError(CNSSError):
    pass


class NotPrimeError(CNSSError, ValueError):
    pass


class PolyParseError(CNSSError, ValueError):
    """Syntax error in a polynomial expression; ``position`` is a 0-based offset."""

    def __init__(self, message: str, position: int | None = None, text: str | None = None):
        self.position = position
        self.text = text
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class PreconditionError(CNSSError, ValueError):
    pass


class BudgetExceeded(CNSSError):
    pass


class FormatError(CNSSError, ValueError):
    """Malformed grid, system or graph file."""
