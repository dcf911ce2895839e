"""Custom exceptions for the naming-game library."""

from typing import Any


class NameGameError(Exception):
    """Base exception for all naming-game errors."""

    def __init__(self, message: str, details: dict[str, Any] | None = None) -> None:
        super().__init__(message)
        self.message = message
        self.details = details or {}


class ConfigurationError(NameGameError):
    """Raised when there's a configuration issue."""


class InvalidDomainError(NameGameError, ValueError):
    """Raised when a numeric argument lies outside its mathematical domain."""


class InvalidInputError(NameGameError, ValueError):
    """Raised when structured input (labels, tables, edges) is malformed."""


class NotFoundError(NameGameError, KeyError):
    """Raised when a name is not part of a table's universe."""

    def __str__(self) -> str:
        return self.message


class NormalizationError(NameGameError):
    """Raised when frequencies are too far from summing to one to be repaired."""


class InsufficientDataError(NameGameError):
    """Raised when an operation needs more data points than it was given."""


class ParsingError(NameGameError):
    """Raised when input data cannot be parsed."""

    def __init__(
        self,
        message: str,
        line_number: int | None = None,
        details: dict[str, Any] | None = None,
    ) -> None:
        super().__init__(message, details)
        self.line_number = line_number
        if line_number is not None:
            self.details.setdefault("line_number", line_number)


class DegenerateInputError(NameGameError):
    """Raised when a statistic is infinite for the given input."""


class UndefinedRatioError(NameGameError, ZeroDivisionError):
    """Raised when an error measure would divide by a zero desired popularity."""
