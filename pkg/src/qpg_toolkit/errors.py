"""Exception hierarchy shared by every module.

The CLI maps ConfigError, ParseError and plain ValueError to exit code 2;
any other QpgError maps to exit code 1.
"""

from __future__ import annotations


class QpgError(Exception):
    """Base class for all toolkit errors."""


class ConfigError(QpgError):
    """Missing or invalid configuration."""


class RangeError(QpgError, ValueError):
    """Input outside a model's validity range. The message names the bound."""

    def __init__(self, bound: str, value: float, limit: float) -> None:
        self.bound = bound
        self.value = value
        self.limit = limit
        super().__init__(f"{bound} violated: got {value:g}, limit {limit:g}")


class AxisError(QpgError, ValueError):
    """Axis not strictly monotone, not uniform, or not of the expected kind."""


class BandwidthError(QpgError):
    """No threshold crossing found inside the spectrum axis."""


class NormalizationError(QpgError):
    """An envelope could not be normalized on the supplied grid."""


class SupportError(QpgError):
    """A grid does not cover the support of the pump envelope."""


class DecompositionError(QpgError):
    """Schmidt decomposition of a degenerate (all-zero) amplitude matrix."""


class FitDataError(QpgError):
    """Insufficient or degenerate data for a fit."""


class ParseError(QpgError):
    """Malformed input file; carries the 1-based line number."""

    def __init__(self, source: str, line: int, reason: str) -> None:
        self.source = source
        self.line = line
        self.reason = reason
        super().__init__(f"{source}:{line}: {reason}")
