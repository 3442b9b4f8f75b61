class CobwebDomainError(Exception):
    """
    Base class for violated preconditions of a library operation.
    """

    pass


class ShapeError(CobwebDomainError, ValueError):
    """
    Exception raised when matrix dimensions do not fit the operation.
    """

    pass


class ArgumentError(CobwebDomainError, ValueError):
    pass


class BoundsError(CobwebDomainError, IndexError):
    """
    Exception raised when a vertex, block or matrix coordinate is out of range.
    """

    pass


class JoinConditionError(CobwebDomainError, ValueError):
    """
    Exception raised when two chains cannot be naturally joined because the
    shared level differs in size.
    """

    pass


class FeasibilityError(CobwebDomainError, ValueError):
    """
    Exception raised when an exhaustive search or enumeration is asked to run
    above its feasibility bound.
    """

    pass


class FormulaMismatchError(CobwebDomainError, ArithmeticError):
    """
    Exception raised when two independent evaluations of the same count
    disagree.
    """

    pass


class MatrixParseError(ValueError):
    """
    Exception raised when a matrix, real-matrix or chain text file is malformed.
    """

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
