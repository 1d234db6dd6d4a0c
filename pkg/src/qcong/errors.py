"""Exception types shared across the package."""


class NotDivisibleError(ArithmeticError):
    """Exact polynomial division failed.

    ``remainder`` holds the nonzero remainder (an ``IntPoly``) at the point
    the division gave up.
    """

    def __init__(self, message, remainder=None):
        super().__init__(message)
        self.remainder = remainder


class LeadingCoeffNotUnitError(ValueError):
    """Euclidean reduction needs a divisor whose leading coefficient is +1 or -1."""


class InternalError(RuntimeError):
    """A step that is mathematically guaranteed to succeed did not; this is a bug."""


class InvalidParamsError(ValueError):
    """Checker parameters violate a stated precondition."""


class SingularSpecialization(ArithmeticError):
    """A rational specialization makes a required denominator vanish."""
