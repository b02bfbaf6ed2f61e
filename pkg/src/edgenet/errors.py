"""Exception types shared across the package.

Plain ``ValueError`` is used for argument-domain violations (bad alpha,
nonpositive gamma argument, vertex id out of range). The classes below mark
failures the CLI needs to tell apart: data problems versus numeric ones.
"""


class EdgenetError(Exception):
    """Base class for package-specific failures."""


class ParseError(EdgenetError):
    """Malformed edge-list input; carries the offending 1-based line number."""

    def __init__(self, message: str, line_number: int | None = None):
        super().__init__(message)
        self.line_number = line_number


class EmptyInputError(ParseError):
    """Edge-list input contained no edges."""


class MalformedGraphError(EdgenetError):
    """Graph violates a structural precondition (non-canonical labels, ...)."""


class InsufficientDataError(EdgenetError):
    """Too few support points for the requested estimate."""


class BracketingError(EdgenetError):
    """Root bracket endpoints do not straddle a sign change."""


class NumericError(EdgenetError):
    """A numeric evaluation produced a non-finite value."""


class UnattainableTargetError(EdgenetError):
    """Bracket expansion hit its cap without reaching the target value."""


class DivergentEstimateError(EdgenetError):
    """Estimator has no information beyond its cutoff (degenerate tail)."""


class ExponentOutOfRangeError(EdgenetError):
    """Fitted power-law exponent falls outside the model's (1, 2) band."""


class InvalidInputError(EdgenetError):
    """Input is statistically invalid for the requested operation."""
