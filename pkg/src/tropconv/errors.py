"""Exception hierarchy.

Every domain error derives from :class:`TropConvError`; the command line
reports ``type(err).__name__`` in its JSON diagnostic, so class names are
part of the public surface.
"""


class TropConvError(Exception):
    """Base class for all domain errors raised by tropconv."""


class DimensionMismatch(TropConvError, ValueError):
    pass


class EmptyInput(TropConvError, ValueError):
    pass


class CoefficientNormalization(TropConvError, ValueError):
    """Affine tropical combination whose coefficients do not have minimum 0."""


class IndexOutOfRange(TropConvError, IndexError):
    pass


class ZeroNormal(TropConvError, ValueError):
    pass


class ZeroVector(TropConvError, ValueError):
    pass


class NotSquare(TropConvError, ValueError):
    pass


class NotLinear(TropConvError, ValueError):
    """The polyhedron handed to a linear-space routine is not a linear subspace."""


class NotBalanced(TropConvError, ValueError):
    def __init__(self, total):
        self.total = tuple(total)
        super().__init__(f"weighted ray sum {list(self.total)} is not a multiple of (1,...,1)")


class LinealityDirection(TropConvError, ValueError):
    """A ray direction parallel to (1,...,1), which is zero in the projective torus."""


class NotTwoDimensional(TropConvError, ValueError):
    pass


class SchemaError(TropConvError, ValueError):
    """Malformed JSON input."""
