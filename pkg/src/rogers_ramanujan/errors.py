"""Exception types shared by every numerical module.

Library functions raise these; the CLI maps them onto exit codes.
"""


class RogersRamanujanError(Exception):
    """Base class for every failure raised by this package."""


class DomainError(RogersRamanujanError, ValueError):
    """An argument lies outside the domain of the requested function."""


class NoSignChangeError(DomainError):
    """A bracketing root finder was given an interval without a sign change."""


class DegreeTooHighError(RogersRamanujanError, ValueError):
    """Root isolation was asked for a polynomial above the supported degree."""


class InputError(RogersRamanujanError, ValueError):
    """A command-line value could not be parsed or violates a precondition."""


class NonConvergenceError(RogersRamanujanError):
    """An iteration hit its cap before reaching the requested precision."""


class DerivativeVanishedError(RogersRamanujanError):
    """Newton's method met a derivative too small to divide by."""


class DivisionByZeroError(RogersRamanujanError, ZeroDivisionError):
    """A rational expression has a vanishing denominator at the given point."""


class ResidualTooLargeError(RogersRamanujanError):
    """An identity that must hold to working precision does not.

    Attributes:
        name: Short identifier of the failed identity, e.g. ``"eq13"``.
        residual: The residual that was measured.
        tolerance: The bound it had to stay below.
    """

    def __init__(self, name: str, residual: object, tolerance: object) -> None:
        """Record the failed identity and build a readable message."""
        self.name = name
        self.residual = residual
        self.tolerance = tolerance
        super().__init__(f"{name} residual {residual} exceeds tolerance {tolerance}")


__all__ = [
    "DegreeTooHighError",
    "DerivativeVanishedError",
    "DivisionByZeroError",
    "DomainError",
    "InputError",
    "NoSignChangeError",
    "NonConvergenceError",
    "ResidualTooLargeError",
    "RogersRamanujanError",
]
