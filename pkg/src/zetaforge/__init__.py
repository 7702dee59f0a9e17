"""High-precision zeta-sum numerics and an identity verification harness."""

__version__ = "0.1.0"

from .errors import (ConfigurationError, ConvergenceError, DomainError, EvaluationError,
                     IntegrabilityError, PrecisionError, UnknownIdentityError, UsageError,
                     ZetaforgeError)
from .numerics import ExtendedReal, SeriesSpec, sum_series

__all__ = [
    "__version__", "ConfigurationError", "ConvergenceError", "DomainError", "EvaluationError",
    "IntegrabilityError", "PrecisionError", "UnknownIdentityError", "UsageError",
    "ZetaforgeError", "ExtendedReal", "SeriesSpec", "sum_series",
]
