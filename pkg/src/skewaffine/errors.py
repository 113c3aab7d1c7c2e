"""Exception hierarchy shared across the package."""


class SkewAffineError(Exception):
    """Base class for all errors raised by this package."""


class InputError(SkewAffineError):
    """Malformed or inconsistent user input (files, schemas, parameters)."""


class DivisionByZero(SkewAffineError, ZeroDivisionError):
    """Inversion of the zero scalar."""


class DimensionMismatch(SkewAffineError):
    """Operands have incompatible ambient dimensions."""


class DegenerateLine(SkewAffineError):
    """Attempt to build a line through two equal points."""


class NotTwoSided(SkewAffineError):
    """Operation requires a two-sided subspace."""


class DimensionTooSmall(SkewAffineError):
    """Ambient dimension too small for the requested construction."""


class SideUnrepresentable(SkewAffineError):
    """A set of points computed over the center is not a left or right
    affine subspace, so it cannot be returned with a side tag."""

    def __init__(self, message, point=None, direction_qdim=None):
        super().__init__(message)
        self.point = point
        self.direction_qdim = direction_qdim


class NotCentralRow(SkewAffineError):
    """A matrix row is not a scalar multiple of a central vector."""

    def __init__(self, message, row_index=None):
        super().__init__(message)
        self.row_index = row_index


class NonCentralRatio(SkewAffineError):
    """Row coefficients of a matrix have a non-central ratio."""

    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class InconsistentAlpha(SkewAffineError):
    """Scaling maps extracted at different base vectors disagree."""


class NotAntiMultiplicative(SkewAffineError):
    """Extracted scaling map fails to reverse products."""


class NoSolution(SkewAffineError):
    """No conjugating element realizes the requested value table."""


class DecompositionError(SkewAffineError):
    """Failure of the normal-form pipeline, tagged with the stage name."""

    def __init__(self, stage, message):
        super().__init__(f"{stage}: {message}")
        self.stage = stage


class NotAdditive(DecompositionError):
    def __init__(self, message, witness=None):
        super().__init__("additivity", message)
        self.witness = witness


class ReconstructionMismatch(DecompositionError):
    def __init__(self, message, witness=None):
        super().__init__("reconstruction", message)
        self.witness = witness
