"""Exception types raised across the package."""


class BetaNumError(Exception):
    """Base class for every error raised by betanum."""


# exact arithmetic

class NotMonic(BetaNumError, ValueError):
    pass


class NotSquarefree(BetaNumError, ValueError):
    pass


class RootCountNotOne(BetaNumError, ValueError):
    def __init__(self, count):
        super().__init__(f"isolating interval contains {count} roots, expected exactly 1")
        self.count = count


class NotABase(BetaNumError, ValueError):
    """The isolated root is not > 1, so it cannot serve as a numeration base."""


class BaseMismatch(BetaNumError, ValueError):
    pass


class DivisionByZero(BetaNumError, ZeroDivisionError):
    pass


class NonInvertibleDivisor(BetaNumError, ArithmeticError):
    """The divisor shares a factor with a reducible defining polynomial.

    Callers that hit this are expected to fall back to validated numerics.
    """


# expansions of unity and digit strings

class StateOutOfRange(BetaNumError, ValueError):
    pass


class UndeterminedInput(BetaNumError, ValueError):
    pass


class NegativeInput(BetaNumError, ValueError):
    pass


class TruncatedExpansion(BetaNumError, ValueError):
    pass


class InvalidDigits(BetaNumError, ValueError):
    pass


# words and beta-integers

class BadSeedLetter(BetaNumError, ValueError):
    pass


class NotParry(BetaNumError, ValueError):
    pass


# asymptotics

class RepeatedRoots(BetaNumError, ValueError):
    pass


class PrecisionNotReached(BetaNumError, ArithmeticError):
    pass


class NonRealResult(BetaNumError, ArithmeticError):
    pass


class NotPisot(BetaNumError, ValueError):
    pass


class NotQuadratic(BetaNumError, ValueError):
    pass
