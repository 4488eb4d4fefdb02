#!/usr/bin/env python3
"""
Exception hierarchy for the algebra engine and the verification front end.

Every engine failure derives from AlgebraError so suite runners can record a
failed check and keep going.
"""

from typing import Any, Optional


class AlgebraError(Exception):
    """Base class for all engine errors."""


class DivisionByZero(AlgebraError, ZeroDivisionError):
    """Division by the zero Coefficient."""


class EvaluationPole(AlgebraError):
    """A denominator vanished under a parameter assignment."""


class ParseError(AlgebraError, ValueError):
    """Malformed expression text."""

    def __init__(self, message: str, position: int = 0, text: str = ""):
        self.position = position
        self.text = text
        if text:
            pointer = " " * position + "^"
            message = f"{message} at position {position}\n  {text}\n  {pointer}"
        super().__init__(message)


class MixedParity(AlgebraError):
    """An operation that needs homogeneous parity got a mixed element."""


class TruncatedOperand(AlgebraError):
    """An exact-only operation received a truncated symbol."""


class UnknownLabel(AlgebraError, KeyError):
    """A basis or field label outside the family."""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown label"


class UndefinedMode(AlgebraError):
    """A (label, mode) pair that the family does not define."""


class ClosureFailure(AlgebraError):
    """A bracket left the span of the labeled family."""

    def __init__(self, message: str, element: Optional[Any] = None):
        self.element = element
        super().__init__(message)


class ShapeViolation(AlgebraError):
    """A grading-zero matrix does not have the expected block shape."""

    def __init__(self, message: str, entry: Optional[tuple] = None):
        self.entry = entry
        super().__init__(message)


class UnknownVariant(AlgebraError):
    """A generator variant name that is not defined."""


class NoConvergence(AlgebraError):
    """Bracket generation still growing after the round limit."""


class UnknownSuite(AlgebraError):
    """A verification suite name that is not registered."""


class IOFailure(AlgebraError, OSError):
    """Report output could not be written."""
