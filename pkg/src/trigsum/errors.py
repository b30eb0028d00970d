"""Exception types shared across the package."""

from fractions import Fraction


class DomainError(ValueError):
    """A parameter set violates a documented precondition.

    The message names the violated constraint, e.g. ``"k must be odd"``.
    """


class SingularTerm(ArithmeticError):
    """A summand hit an exact pole (zero denominator at a rational angle).

    Raised from the exact pre-check, never from a floating-point overflow,
    so it fires independently of working precision.
    """

    def __init__(self, message, argument=None, index=None):
        super().__init__(message)
        #: reduced rational angle (in units of pi) that landed on the pole
        self.argument = Fraction(argument) if argument is not None else None
        #: index of the offending term within the sum, when known
        self.index = index


class ConsistencyError(ArithmeticError):
    """An internal cross-check failed (e.g. a value that must be a whole
    number was not close to one).  Indicates a bug or bad input, never a
    rounding issue at sane precision."""
