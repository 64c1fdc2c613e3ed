"""Exception hierarchy shared by all casilamb modules."""


class CasilambError(Exception):
    """Base class for all casilamb errors."""


class DomainError(CasilambError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class RegimeError(CasilambError):
    """A physical-regime constraint is violated (weak coupling, confinement)."""


class ConvergenceError(CasilambError):
    """A numerical routine failed to converge.

    ``partial_value`` carries the best estimate accumulated before giving up.
    """

    def __init__(self, message, partial_value=None):
        super().__init__(message)
        self.partial_value = partial_value
