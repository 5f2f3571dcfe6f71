"""Exception types shared across the package."""


class FracQuatError(Exception):
    """Base class for all package-specific errors."""


class DomainError(FracQuatError):
    """An operand is outside the domain where the operation is defined,
    or the result would leave the closed function class."""


class CubeMismatch(FracQuatError):
    """Two fields anchored to different cubes were combined.

    Fractional derivatives depend on the base point, so silent re-basing
    would change their meaning; the caller must re-express fields on one
    shared cube explicitly."""


class ParameterError(FracQuatError):
    """A physical parameter is outside its admissible range."""


class ShapeError(FracQuatError):
    """A field payload is missing slots required by the selected system."""


class SingularMedium(FracQuatError):
    """The medium is degenerate (zero frequency or wave number) and the
    requested transformation is not invertible."""
