"""Error types shared across the workbench.

Every failure mode that callers are expected to catch gets its own class here;
modules raise these rather than bare ValueError so the CLI can map them to
exit codes.
"""

__all__ = [
    'SymcatError',
    'ParseError',
    'NonIntegralResult',
    'InsufficientVariables',
    'LatticeMismatch',
    'RankMismatch',
    'FlavorMismatch',
    'VerificationFailure',
    'BoundExceeded',
    'IllFormedSlice',
    'SignatureMismatch',
    'NotBraidOnly',
    'UnrealizableAtRank',
]


class SymcatError(Exception):
    """Base class for all workbench errors."""


class ParseError(SymcatError):
    """A textual literal does not match its documented grammar."""


class NonIntegralResult(SymcatError):
    """A conversion out of the powersum basis produced a non-integer coefficient."""


class InsufficientVariables(SymcatError):
    """A polynomial expansion was requested in fewer variables than the degree."""


class LatticeMismatch(SymcatError):
    """Operands live in different polynomial lattices (monomial vs divided-power)."""


class RankMismatch(SymcatError):
    """Operands belong to algebras of different ranks."""


class FlavorMismatch(SymcatError):
    """Grothendieck-group vectors of different flavors were combined."""


class VerificationFailure(SymcatError):
    """A verification routine found a violated check.

    Carries the offending check's name and, when available, the full report.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class BoundExceeded(SymcatError):
    """A requested computation exceeds the documented size bounds."""


class IllFormedSlice(SymcatError):
    """A diagram slice does not type-check against the strand configuration."""


class SignatureMismatch(SymcatError):
    """Diagram composition or addition with incompatible boundary signatures."""


class NotBraidOnly(SymcatError):
    """A permutation image was requested for a diagram containing cups or caps."""


class UnrealizableAtRank(SymcatError):
    """A diagram or path needs a negative symmetric-group rank at the given level."""
