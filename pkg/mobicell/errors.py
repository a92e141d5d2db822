"""Exceptions raised by the mobicell library."""


class MobicellError(Exception):
    """Base class of all mobicell errors."""


class ParameterError(MobicellError, ValueError):
    """Argument outside the domain of an operation."""


class SingularityError(ParameterError):
    """Zero separation in a path-loss evaluation."""


class DivergentInterferenceError(ParameterError):
    """Path-loss exponent for which the aggregate interference diverges."""


class UnsupportedExponentError(ParameterError):
    """Closed form only available for another path-loss exponent."""


class InfeasibleTargetError(ParameterError):
    """Access-link success target that no transmit power reaches."""


class SnapshotError(MobicellError, RuntimeError):
    """Network realization could not be built."""

    def __init__(self, message, trial=None):
        if trial is not None:
            message = f"trial {trial}: {message}"
        super().__init__(message)
        self.trial = trial
        """Index of the Monte Carlo trial, if known."""


class NumericalError(MobicellError, ArithmeticError):
    """Quadrature or series evaluation produced an unusable value."""
