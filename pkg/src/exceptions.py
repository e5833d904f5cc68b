"""
Exceptions raised across the toolkit

The CLI maps every EgonetError to exit code 1.
"""

from typing import Optional


class EgonetError(Exception):
    """Base class for all domain errors"""


class ParseError(EgonetError):
    """Malformed dyad CSV, degree histogram or edge list"""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ValidationError(EgonetError):
    """Dataset breaks a structural invariant (e.g. duplicate rank)"""


class EmptyResultError(EgonetError):
    """No eligible egos or dyads for the requested statistic"""


class InsufficientDataError(EgonetError):
    """Too few pairs, ranks or egos for the requested statistic"""


class ZeroDifferencesError(InsufficientDataError):
    """All paired differences are zero"""


class ConstantInputError(EgonetError):
    """A rank correlation input is constant"""


class ConfigError(EgonetError):
    """Invalid parameters"""
