"""Exception hierarchy shared by every module.

Domain errors derive from :class:`SkewPBWError`; the CLI maps them to exit
status 1.
"""


class SkewPBWError(Exception):
    """Base class for all domain errors."""


class DimensionMismatch(SkewPBWError):
    pass


class NotInjective(SkewPBWError):
    def __init__(self, message, kernel=None):
        super().__init__(message)
        self.kernel = kernel


class NotInCone(SkewPBWError):
    pass


class NoMinimalElement(SkewPBWError):
    pass


class ModeMismatch(SkewPBWError, TypeError):
    pass


class Unsupported(SkewPBWError):
    pass


class PresentationError(SkewPBWError):
    """Raised by validation; ``field`` locates the offending datum."""

    def __init__(self, message, field=None):
        super().__init__(message if field is None else f"{message} (at {field})")
        self.field = field


class QMatrixInvalid(PresentationError):
    pass


class SigmaNoncommuting(PresentationError):
    pass


class LaurentRequiresQuasiCommutative(PresentationError):
    pass


class DeltaWithNontrivialSigma(PresentationError):
    pass


class RelationsInconsistent(PresentationError):
    pass


class NotQuasiCommutative(SkewPBWError):
    pass


class PresentationMismatch(SkewPBWError):
    pass


class IllegalExponent(SkewPBWError):
    pass


class NegativeValuation(SkewPBWError):
    pass


class ZeroSeries(SkewPBWError, ZeroDivisionError):
    pass


class UnknownLeadingTerm(SkewPBWError):
    pass


class ParseError(SkewPBWError):
    def __init__(self, message, position=None):
        super().__init__(message if position is None else f"{message} at {position}")
        self.position = position
