"""Exception hierarchy.

``ValidationError`` covers every violated input invariant (the CLI maps it to
exit code 2). ``NoConvergence`` is a numerical failure, not an input problem.
"""


class QEntropyError(Exception):
    pass


class ValidationError(QEntropyError, ValueError):
    pass


class NoConvergence(QEntropyError, RuntimeError):
    pass


class NotHermitian(ValidationError):
    pass


class NotPositive(ValidationError):
    pass


class TraceNotOne(ValidationError):
    pass


class DimensionMismatch(ValidationError):
    pass


class DimensionOverflow(ValidationError):
    pass


class DomainError(ValidationError):
    pass


class BadDimension(ValidationError):
    pass


class InfeasibleCount(ValidationError):
    pass


class ConstraintOutOfRange(ValidationError):
    pass


class SupportsNotOrthogonal(ValidationError):
    pass


class NotAProjectionFamily(ValidationError):
    pass


class NotAPartition(ValidationError):
    """Kraus family fails sum V*V = I."""


class NotABasis(ValidationError):
    pass


class NotAPovm(ValidationError):
    pass


class NotOrthogonal(ValidationError):
    pass


class NotUnitNorm(ValidationError):
    pass


class MatrixNotPsd(ValidationError):
    pass


class RankDeficient(ValidationError):
    pass


class NotAProbabilityVector(ValidationError):
    pass


class NotAProbabilityTriple(NotAProbabilityVector):
    pass


class SectorViolation(ValidationError):
    pass


class FormatError(ValidationError):
    """Malformed JSON input file."""
