"""Exception types raised across the package."""


class ItertorError(ValueError):
    """Base class for every error the library raises on bad input."""


class ParityError(ItertorError):
    """A block's generator degree has the wrong parity for its kind."""


class GradingError(ItertorError):
    """A generator has degree 0 where strictly positive grading is required."""


class CapMismatchError(ItertorError):
    pass


class CharacteristicMismatchError(ItertorError):
    pass


class PreconditionError(ItertorError):
    """An operation was called outside the parameter range it supports."""


class MemoryGuardError(ItertorError):
    """A bar complex differential would exceed the configured size limit."""


class SeriesFormatError(ItertorError):
    """A Poincare series file is malformed."""
