"""Exception hierarchy.

Everything raised on bad input derives from :class:`CbrError`; the CLI maps
:class:`ParseError` to exit status 2 and every other :class:`CbrError` to 1.
"""


class CbrError(Exception):
    """Base class for domain errors."""


class InvalidDiagramError(CbrError, ValueError):
    """The pairs do not form a color-consistent perfect matching."""


class BoundaryMismatchError(CbrError, ValueError):
    """Two morphisms were composed or glued along different objects."""


class IncompatibleLayersError(CbrError, ValueError):
    """A generator slice does not fit the boundary it is applied to."""


class NotLoopFreeError(CbrError, ValueError):
    pass


class UnknownColorError(CbrError, KeyError):
    """A diagram uses a color the representation does not define."""

    def __str__(self):
        return Exception.__str__(self)


class MatrixError(CbrError, ValueError):
    pass


class NotSquareError(MatrixError):
    pass


class NotSymmetricError(MatrixError):
    pass


class SingularMatrixError(MatrixError):
    pass


class ZeroDimensionError(CbrError, ValueError):
    pass


class UnsupportedFormatError(CbrError, ValueError):
    pass


class ParseError(CbrError, ValueError):
    """Malformed DSL text or input file.

    ``position`` is the 0-based character offset for DSL errors, ``None``
    when no meaningful offset exists.
    """

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
