"""Generalized first Stieltjes constant from its limit definition."""

from __future__ import annotations

from functools import lru_cache

from ..errors import DomainError
from ..numerics.extended import ExtendedReal, ulp_err, wp
from ..numerics.tails import em_boundary
from .zeta import _real

# Lattice point at which the partial sum is closed.  Beyond y ~ 21 the
# eleventh derivative of ln(y)/y keeps one sign, so the remainder bound holds.
_CLOSE_AT = 256


@lru_cache(maxsize=1024)
def _gamma1(a) -> ExtendedReal:
    direct = wp.mpf(0)
    absum = wp.mpf(0)
    for k in range(_CLOSE_AT + 1):
        y = k + a
        t = wp.log(y) / y
        direct += t
        absum += abs(t)
    x0 = _CLOSE_AT + a
    L0 = wp.log(x0)
    # sum_{k>N} f(k+a) - ln^2(m+a)/2 -> -ln^2(x0)/2 + boundary terms as m -> inf
    boundary, rem = em_boundary(1, 1, x0)
    v = direct - L0 * L0 / 2 + boundary
    err = rem + (2 * _CLOSE_AT + 16) * ulp_err(absum + L0 * L0)
    return ExtendedReal(v, err)


def stieltjes_gamma1(a=1) -> ExtendedReal:
    """gamma_1(a) = lim_m [sum_{k=0}^m ln(k+a)/(k+a) - ln^2(m+a)/2], a > 0.

    >>> abs(float(stieltjes_gamma1(1)) + 0.0728158454836767) < 1e-15
    True
    """
    a = _real(a, "a")
    if a <= 0:
        raise DomainError("stieltjes_gamma1 needs a > 0")
    return _gamma1(a)
