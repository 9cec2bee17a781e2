"""Shared exception types."""


class BudgetError(RuntimeError):
    """An operation would exceed a configured size budget."""


class ParseError(ValueError):
    """Malformed input text; carries a 1-based line number when known."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
