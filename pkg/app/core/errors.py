"""Exception types raised across cubix.

Everything derives from ``ValueError`` as well, so callers that only know the
usual ``except ValueError`` contract keep working.
"""


class CubixError(ValueError):
    """Base class for all cubix errors."""


class DimensionMismatchError(CubixError):
    pass


class DegreeOutOfRangeError(CubixError):
    pass


class InvalidComplexError(CubixError):
    pass


class InvalidShapeError(CubixError):
    def __init__(self, message: str, violation=None):
        super().__init__(message)
        self.violation = violation


class MissingDegeneraciesError(CubixError):
    pass


class NotSurjectiveError(CubixError):
    pass


class NotIdempotentError(CubixError):
    pass


class NotChainMapError(CubixError):
    pass


class NonFunctorialError(CubixError):
    pass


class UnknownModelError(CubixError):
    pass


class UnsupportedFunctorError(CubixError):
    pass


class SpecParseError(CubixError):
    pass


class ResolutionError(CubixError):
    """A resolution broke one of its own construction invariants."""
