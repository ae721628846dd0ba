"""Exception types shared across the engine."""

from __future__ import annotations


class QsgError(Exception):
    """Base class for all engine errors."""


class TableMismatchError(QsgError):
    """Raised when elements over different generator tables are combined."""


class UnknownGeneratorError(QsgError):
    """Raised when a name does not resolve against a generator table."""


class NotInvertibleError(QsgError):
    """Raised when localization is requested at a non-invertible or odd generator."""


class StepBudgetExceeded(QsgError):
    """Raised when a normalize call spends more rewrite steps than allowed."""


class ParseError(QsgError):
    """Raised on syntax errors in expressions or presentation files.

    Carries a 1-based position when the offending token is known.
    """

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (position {position})"
        super().__init__(message)
        self.position = position


class ValidationError(QsgError):
    """Raised when a rule or presentation fails a structural invariant."""
