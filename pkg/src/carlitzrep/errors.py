"""Exception types shared across the package."""


class CarlitzRepError(Exception):
    pass


class ConfigError(CarlitzRepError, ValueError):
    pass


class InsufficientPrecision(CarlitzRepError, ArithmeticError):
    """An operation needs a coefficient that lies outside the known window."""


class NotUnit(CarlitzRepError, ArithmeticError):
    """Leading coefficient is not invertible in the coefficient ring."""


class NotMonic(CarlitzRepError, ValueError):
    pass


class NotInvertible(CarlitzRepError, ValueError):
    pass


class SingularMatrix(CarlitzRepError, ArithmeticError):
    pass


class Unsupported(CarlitzRepError, NotImplementedError):
    pass


class PointOnBoundary(CarlitzRepError, ValueError):
    """The point lies in K_infinity, i.e. outside the Drinfeld upper half-plane."""


class RandomnessExhausted(CarlitzRepError, RuntimeError):
    pass


class UnknownCheck(CarlitzRepError, KeyError):
    pass
