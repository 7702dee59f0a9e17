"""Working-precision arithmetic, tail-closed summation and extrapolation."""

from .extended import (DECIMAL_DIGITS, UNIT_ROUNDOFF, WORKING_BITS, ExtendedReal,
                       format_decimal, to_mpf, wp)
from .bernoulli import bernoulli
from .expansions import InverseSeries, combine_models, scale_model
from .extrapolation import ExtrapolationModel, extrapolate
from .series import SeriesKind, SeriesSpec, current_max_terms, max_terms, sum_series
from .summation import compensated_sum
from .tails import (GeometricTail, HarmonicPowerTail, LogPowerTail, PowerTail, TailModel,
                    TailTerm, harmonic_tail, lattice_tail, log_zeta_tail,
                    weighted_harmonic_tail, zeta_tail)

__all__ = [
    "DECIMAL_DIGITS", "UNIT_ROUNDOFF", "WORKING_BITS", "ExtendedReal", "format_decimal",
    "to_mpf", "wp", "bernoulli", "InverseSeries", "combine_models", "scale_model",
    "ExtrapolationModel", "extrapolate", "SeriesKind", "SeriesSpec", "current_max_terms",
    "max_terms", "sum_series", "compensated_sum", "GeometricTail", "HarmonicPowerTail",
    "LogPowerTail", "PowerTail", "TailModel", "TailTerm", "harmonic_tail", "lattice_tail",
    "log_zeta_tail", "weighted_harmonic_tail", "zeta_tail",
]
