"""Exception hierarchy shared by every cyclolog module."""


class CyclologError(Exception):
    """Base class for all errors raised by this package."""


class InvalidModulus(CyclologError, ValueError):
    """n is not admissible (n < 5 or n = 2 mod 4)."""


class OutOfRange(CyclologError, ValueError):
    pass


class BadDivisor(CyclologError, ValueError):
    pass


class DegenerateAngle(CyclologError, ArithmeticError):
    """A sine factor vanished, so its logarithm is undefined."""


class RankDeficient(CyclologError, ArithmeticError):
    pass


class NumericallySingular(CyclologError, ArithmeticError):
    pass


class DegenerateClass(CyclologError, ArithmeticError):
    """A coset of 2L has an ambiguous set of minimal vectors.

    ``class_index`` is the bitmask of the coset relative to the reduced basis.
    """

    def __init__(self, message: str, class_index: int):
        super().__init__(message)
        self.class_index = class_index


class BudgetExceeded(CyclologError, RuntimeError):
    """Enumeration visited more nodes than its configured cap."""


class RankTooLarge(BudgetExceeded):
    """The requested exact algorithm is restricted to small rank."""
