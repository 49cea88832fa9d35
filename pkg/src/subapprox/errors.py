"""Exception types raised across the package."""


class SubapproxError(Exception):
    """Base class for every error raised by subapprox."""


class NegativeValue(SubapproxError, ValueError):
    pass


class DimensionMismatch(SubapproxError, ValueError):
    pass


class GroundSetTooLarge(SubapproxError, ValueError):
    pass


class ExhaustiveGuardExceeded(SubapproxError):
    """The requested exhaustive scan exceeds the configured ground-set cap."""


class InvalidMask(SubapproxError, ValueError):
    pass


class NonRationalValue(SubapproxError, TypeError):
    """Raised when an exact rational table is requested from a square-root oracle."""


class BoundaryNonzero(SubapproxError, ValueError):
    pass


class NotSymmetric(SubapproxError, ValueError):
    pass


class GomoryHuValidationFailed(SubapproxError):
    pass


class ZeroBudget(SubapproxError, ValueError):
    pass


class AllValuesZero(SubapproxError, ValueError):
    pass


class NotConcaveProfile(SubapproxError, ValueError):
    pass


class NotMonotoneProfile(SubapproxError, ValueError):
    pass


class ReconstructionFailed(SubapproxError):
    pass


class NonIntegerValues(SubapproxError, ValueError):
    pass


class BadInstanceSpec(SubapproxError, ValueError):
    pass


class InstanceTooLarge(SubapproxError, ValueError):
    pass


class ParseError(SubapproxError, ValueError):
    pass


class SchemaError(SubapproxError, ValueError):
    def __init__(self, message, path=""):
        self.path = path
        super().__init__(f"{path}: {message}" if path else message)
