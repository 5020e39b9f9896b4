"""
Error types raised across ferro2spin.

Every message names the violated precondition so the CLI can print it as is.
"""


class Ferro2SpinError(Exception):
    """Base class for all package errors."""


class SpinSystemError(Ferro2SpinError, ValueError):
    """Malformed instance or input document."""


class InstanceTooLarge(Ferro2SpinError):
    """Brute-force oracle guard exceeded."""


class VertexPinned(Ferro2SpinError):
    """A marginal was requested at a pinned vertex."""


class BudgetExceeded(Ferro2SpinError):
    """Full SAW expansion needs more nodes than the configured budget."""


class DomainViolation(Ferro2SpinError, ValueError):
    """A ratio fed to a potential lies outside its declared domain."""


class ContractionError(Ferro2SpinError):
    """A declared potential constant failed numeric re-verification."""


class RegimeViolation(Ferro2SpinError, ValueError):
    """Parameters fall outside the regime an operation is defined for."""


class ParametersOutOfRange(RegimeViolation):
    pass


class GammaEqualsOne(RegimeViolation):
    pass


class DegreeTooLarge(RegimeViolation):
    pass


class LambdaAtOrAboveCritical(RegimeViolation):
    pass


class DBelowCritical(RegimeViolation):
    pass


class ConcavityCheckFailed(RegimeViolation):
    pass
