"""Exception hierarchy shared by all modules."""


class HadamardKitError(Exception):
    """Base class for every error raised by this package."""


class DimensionError(HadamardKitError, ValueError):
    """Two vectors (or a vector and a matrix) disagree in length."""


class ShapeError(HadamardKitError, ValueError):
    """A matrix has the wrong shape for the requested operation."""


class DomainError(HadamardKitError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class CapacityError(HadamardKitError, ValueError):
    """An argument exceeds the desk-scale limits this package supports."""


class PreconditionError(HadamardKitError, ValueError):
    """Inputs violate a documented precondition (e.g. unbalanced rows)."""


class HmatParseError(HadamardKitError, ValueError):
    """Malformed HMAT text. ``lineno`` is 1-based, or None for end of input."""

    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
