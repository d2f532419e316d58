"""Exception hierarchy.

Validation problems (bad parameters, malformed input) derive from
``ValueError`` as well, so callers can treat them the usual way.  Numerical
failures (no root found, a bound violated) only derive from
:class:`NumericalFailure`.
"""


class StripStarlikeError(Exception):
    """Base class for every error raised by this package."""


class NumericalFailure(StripStarlikeError):
    """A computation ran but could not produce a trustworthy answer."""


class InvalidAlpha(StripStarlikeError, ValueError):
    pass


class InvalidParameter(StripStarlikeError, ValueError):
    pass


class DivisionByNonUnit(StripStarlikeError, ZeroDivisionError):
    """Series division or logarithm with a (numerically) zero constant term."""


class NonzeroConstantTerm(StripStarlikeError, ValueError):
    pass


class NonzeroInnerConstant(StripStarlikeError, ValueError):
    pass


class BranchHazard(StripStarlikeError, ValueError):
    """A logarithm argument came too close to zero for the principal branch."""


class ExcludedTheta(StripStarlikeError, ValueError):
    pass


class DerivativeVanishes(NumericalFailure):
    pass


class NoSignChange(NumericalFailure):
    pass


class BoundViolation(NumericalFailure):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class InternalConsistencyError(NumericalFailure):
    """A quantity that is provably in range came out of range by more than rounding."""
