"""Exception hierarchy shared by every hypnp module."""


class HypnpError(Exception):
    """Base class for all library errors."""


class DomainError(HypnpError, ValueError):
    """Input outside the mathematical domain of an operation."""


class InvalidShapeError(DomainError):
    pass


class NotInConeError(DomainError):
    pass


class PreconditionError(DomainError):
    pass


class PrecisionError(HypnpError, ArithmeticError):
    """Working p-adic precision is insufficient for the requested answer.

    ``required`` carries a suggested pi-adic precision when one is known.
    """

    def __init__(self, message, required=None):
        super().__init__(message)
        self.required = required


class ResourceError(HypnpError):
    """An enumeration would exceed its configured budget."""


class GeometryError(HypnpError):
    """Internal inconsistency in a facet or vertex computation."""


class ConventionError(HypnpError):
    """A runtime convention check (e.g. trace sign) failed."""


class NewtonBelowHodgeError(HypnpError, AssertionError):
    """A computed Newton polygon dipped below the Hodge polygon.

    Under the hypotheses of the main comparison this cannot happen, so it
    signals a bug rather than a mathematical outcome.
    """
