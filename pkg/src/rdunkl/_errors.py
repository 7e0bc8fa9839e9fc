"""Exception and warning types shared across the package."""


class RdunklError(Exception):
    """Base class for package errors."""


class DomainError(RdunklError):
    """Input lies outside the mathematical domain of the operation."""


class PoleError(RdunklError):
    """A gamma/Pochhammer factor hit a pole (nonpositive integer argument)."""


class ParameterError(RdunklError):
    """A parameter violates a documented precondition."""


class SingularError(RdunklError):
    """A triangular solve met a vanishing or underflowing diagonal."""


class SeriesOverflowError(RdunklError):
    """Series evaluation lost too many digits; the argument is out of the
    reliable range."""


class ConvergenceWarning(UserWarning):
    """A finite-difference stencil or quadrature did not reach the target
    accuracy."""


class TailWarning(UserWarning):
    """A truncated semi-infinite integral could not certify its tail bound."""
