"""Exception hierarchy."""


class KurepaError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(KurepaError, ValueError):
    """Argument outside the domain of the operation (includes non-finite input)."""


class PoleError(DomainError):
    """Argument too close to a pole.

    ``pole`` holds the location of the offending pole.
    """

    def __init__(self, message, pole=None):
        super().__init__(message)
        self.pole = pole


class SingularArgument(DomainError):
    """Argument collides with the singular set of a rational sequence."""


class ConvergenceError(KurepaError, ArithmeticError):
    """Quadrature did not reach the requested tolerance within its budget."""
