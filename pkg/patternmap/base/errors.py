"""
Exception hierarchy for patternmap.

Input problems subclass ValueError, failed exact arithmetic subclasses
ArithmeticError. The CLI maps them onto exit codes (2 for input, 3 for
cross-check failures).
"""

from __future__ import annotations


class PatternMapError(Exception):
    """Base class for every error raised by patternmap."""


class InputError(PatternMapError, ValueError):
    """Malformed user input: group specs, windows, eta vectors, fixtures."""


class ConfigError(InputError):
    """Invalid configuration value."""


class UnsupportedTypeError(InputError):
    """Root system type or rank outside A/B/C/D."""


class RankMismatchError(PatternMapError, ValueError):
    """Operands live in rings (or groups) of different rank."""


class DatumMismatchError(RankMismatchError):
    """Weyl group elements from different root data."""


class NotARootError(PatternMapError, ValueError):
    """A linear form that is not a root of the datum."""


class NotDivisibleError(PatternMapError, ArithmeticError):
    """Exact division left a nonzero remainder."""


class NotInSpanError(PatternMapError, ArithmeticError):
    """A localized class is not in the span of the Schubert basis."""


class NonPolynomialResultError(PatternMapError, ArithmeticError):
    """The localization sum for a cohomology integral is not a polynomial."""


class NonIntegralResultError(PatternMapError, ArithmeticError):
    """The localization sum for a K-theory integral is not in R(T)."""


class RepNotMinimalError(PatternMapError, ValueError):
    """A coset representative that is not of minimal length."""

    def __init__(self, message: str, valid: list[str] | None = None):
        super().__init__(message)
        self.valid = valid or []


class CrossCheckFailure(PatternMapError):
    """Two independent computations of the same quantity disagree."""

    def __init__(self, message: str, details: dict | None = None):
        super().__init__(message)
        self.details = details or {}
