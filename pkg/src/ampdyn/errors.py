"""Exception hierarchy shared by all modules."""


class AmpdynError(ValueError):
    """Base class for input and degeneracy errors."""


class NonSquareError(AmpdynError):
    pass


class SingularMatrixError(AmpdynError):
    pass


class ZeroPolynomialError(AmpdynError):
    pass


class DimensionMismatchError(AmpdynError):
    pass


class RingMismatchError(AmpdynError):
    pass


class SingularEndoError(SingularMatrixError):
    pass


class NonIntegralDegreeError(AmpdynError):
    pass


class NonMaximalOrderError(AmpdynError):
    pass


class SpectrumNotExpandingError(AmpdynError):
    pass


class NotInvariantError(AmpdynError):
    pass


class ConeDegenerateError(AmpdynError):
    pass


class NotIntAmplifiedError(AmpdynError):
    pass


class HypothesisNotMetError(AmpdynError):
    pass
