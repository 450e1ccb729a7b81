"""Exception types shared across the package.

Each class carries a short machine-readable ``code`` so the CLI can map
failures to structured error payloads without string matching.
"""

from __future__ import annotations


class SemichordError(Exception):
    """Base class for all errors raised by this package."""

    code = "error"


class DomainError(SemichordError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""

    code = "domain"


class InvalidAnglesError(SemichordError, ValueError):
    """An arc partition violates the semicircle invariants."""

    code = "invalid_angles"


class PlacementError(SemichordError, ValueError):
    """A chord chain cannot be placed without leaving the semicircle."""

    code = "placement"


class ConvergenceError(SemichordError, RuntimeError):
    """Root finding hit the iteration cap; carries the final bracket."""

    code = "no_convergence"

    def __init__(self, message: str, bracket_low: float, bracket_high: float):
        super().__init__(message)
        self.bracket_low = bracket_low
        self.bracket_high = bracket_high


class ParseError(SemichordError, ValueError):
    """Command-line input could not be parsed."""

    code = "parse"


class WriteError(SemichordError, OSError):
    """An output file could not be written."""

    code = "write"
