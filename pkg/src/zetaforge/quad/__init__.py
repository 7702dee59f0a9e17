"""Quadrature for smooth, endpoint-singular, half-line and oscillatory integrands."""

from .integrate import (DEFAULT_EPS, FLAGS, IntegralSpec, integrate_finite,
                        integrate_log_oscillatory, integrate_semi_infinite)
from .rules import gauss_legendre

__all__ = ["DEFAULT_EPS", "FLAGS", "IntegralSpec", "integrate_finite",
           "integrate_log_oscillatory", "integrate_semi_infinite", "gauss_legendre"]
