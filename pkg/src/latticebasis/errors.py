"""Exception hierarchy shared by every module of the package."""


class LatticeError(Exception):
    """Base class for all errors raised by latticebasis."""


class DimensionMismatch(LatticeError, ValueError):
    pass


class SingularMatrix(LatticeError, ArithmeticError):
    pass


class RankDeficient(LatticeError, ValueError):
    """The input does not have full row rank; use :func:`lowrank_basis`."""


class TooLarge(LatticeError, ValueError):
    """A brute-force oracle was asked to enumerate more points than its cap."""


class InvariantViolation(LatticeError, AssertionError):
    """An internal invariant of one of the algorithms failed."""


class MatrixParseError(LatticeError, ValueError):
    pass
