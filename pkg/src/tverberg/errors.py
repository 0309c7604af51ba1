"""Exception types shared across the package."""


class TverbergError(Exception):
    """Base class for all library errors."""


class OverlapError(TverbergError):
    """Two collinear segments share more than one point."""


class NotGeneralPosition(TverbergError):
    """Input point set has duplicate points or a collinear triple."""


class CollinearError(TverbergError):
    """An angular ordering hit two points collinear with the center."""


class PreconditionError(TverbergError):
    """A documented operation precondition does not hold."""


class LemmaViolation(TverbergError):
    """A geometric fact that must hold on valid input failed; signals a bug."""


class StructureError(TverbergError):
    """The depth region does not have the structure the construction needs."""


class NoCoverError(TverbergError):
    """No triple of candidate half-planes covers the plane; signals a bug."""


class NotCase4(TverbergError):
    """The depth region is not a single input point."""


class ShapeError(TverbergError):
    """A partition does not have the part sizes the operation requires."""


class ExhaustionError(TverbergError):
    """A retry budget ran out before a generator met its postcondition."""


class ParseError(TverbergError):
    """Malformed instance or result document."""
