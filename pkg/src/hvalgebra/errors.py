"""Shared exception types for the hvalgebra package."""


class HvError(Exception):
    """Base class for all package-specific errors."""


class ParseError(HvError):
    """Malformed input text."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class IndexOverflow(HvError, OverflowError):
    """A basis index escaped the signed 64-bit range."""


class DomainNotCovered(HvError):
    """A tabular map was applied outside its recorded domain."""

    def __init__(self, where):
        super().__init__(f"map does not cover {where}")
        self.where = where


class NotCentral(HvError, ValueError):
    """A value required to be central has non-central support."""


class IncompatibleSpaces(HvError):
    """Solution spaces over different variable registries were combined."""


class InfeasibleWindow(HvError):
    """The requested window admits no constraint rows at all."""


class ZeroDenominator(HvError, ZeroDivisionError):
    """A structure-constant denominator vanished for the given parameters."""
