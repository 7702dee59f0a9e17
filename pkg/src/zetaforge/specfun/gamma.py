"""Digamma, polygamma, harmonic numbers, log-gamma and Gamma(0, x)."""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from ..constants import euler_gamma
from ..errors import DomainError
from ..numerics.bernoulli import bernoulli
from ..numerics.extended import UNIT_ROUNDOFF, ExtendedReal, ulp_err, wp
from .zeta import _real, hurwitz_zeta

_PSI_SHIFT = 40
_PSI_TERMS = 12
_STIRLING_SHIFT = 30
_STIRLING_TERMS = 14


def _positive(x, name="x"):
    v = _real(x, name)
    if v <= 0:
        raise DomainError(f"{name} must be positive")
    return v


@lru_cache(maxsize=4096)
def _digamma(x) -> ExtendedReal:
    m = max(0, int(math.ceil(_PSI_SHIFT - x)))
    shift = wp.mpf(0)
    for k in range(m):
        shift += 1 / (x + k)
    y = x + m
    acc = wp.log(y) - 1 / (2 * y)
    y2 = y * y
    p = y2
    for k in range(1, _PSI_TERMS + 1):
        acc -= wp.mpf(bernoulli(2 * k).numerator) / (bernoulli(2 * k).denominator * 2 * k * p)
        p *= y2
    nxt = float(abs(bernoulli(2 * _PSI_TERMS + 2))) / ((2 * _PSI_TERMS + 2) * float(p))
    v = acc - shift
    return ExtendedReal(v, nxt + (m + 8) * ulp_err(abs(acc) + shift))


def digamma(x) -> ExtendedReal:
    """psi(x) for x > 0 by upward shift and the asymptotic series."""
    return _digamma(_positive(x))


def polygamma(j: int, x) -> ExtendedReal:
    """psi^(j)(x) for x > 0; j >= 1 goes through the Hurwitz zeta function.

    >>> abs(float(polygamma(0, 1)) + 0.5772156649015329) < 1e-15
    True
    """
    if int(j) != j or j < 0:
        raise DomainError("polygamma order must be a nonnegative integer")
    j = int(j)
    x = _positive(x)
    if j == 0:
        return _digamma(x)
    sign = 1 if j % 2 else -1
    return hurwitz_zeta(j + 1, x) * (sign * math.factorial(j))


_FIXED_BITS = 160


def harmonic_number(n: int) -> ExtendedReal:
    """H_n = 1 + 1/2 + ... + 1/n (H_0 = 0)."""
    if int(n) != n or n < 0:
        raise DomainError("harmonic_number needs an integer n >= 0")
    n = int(n)
    if n <= 2000:
        acc = wp.mpf(0)
        for k in range(1, n + 1):
            acc += wp.mpf(1) / k
        return ExtendedReal(acc, 2 * n * ulp_err(acc))
    # fixed-point integer accumulation: each quotient is floored once
    one = 1 << _FIXED_BITS
    acc = sum(one // k for k in range(1, n + 1))
    v = wp.ldexp(wp.mpf(acc), -_FIXED_BITS)
    return ExtendedReal(v, n * 2.0 ** -_FIXED_BITS + ulp_err(v))


def _stirling_tail(y, terms: int):
    """sum_{k=1}^{terms} B_2k / (2k(2k-1) y^(2k-1)) and the next term's size."""
    acc = 0
    y2 = y * y
    p = y
    for k in range(1, terms + 1):
        b = bernoulli(2 * k)
        acc += wp.mpf(b.numerator) / (b.denominator * (2 * k) * (2 * k - 1)) / p
        p *= y2
    k = terms + 1
    nxt = abs(bernoulli(2 * k)) / Fraction(2 * k * (2 * k - 1))
    return acc, float(nxt) / float(abs(p))


@lru_cache(maxsize=4096)
def _log_gamma(x) -> ExtendedReal:
    m = max(0, int(math.ceil(_STIRLING_SHIFT - x)))
    prod = wp.mpf(1)
    for k in range(m):
        prod *= x + k
    y = x + m
    corr, nxt = _stirling_tail(y, _STIRLING_TERMS)
    main = (y - wp.mpf(1) / 2) * wp.log(y) - y + wp.log(2 * wp.pi) / 2
    v = main + corr - wp.log(prod)
    return ExtendedReal(v, nxt + (2 * m + 16) * ulp_err(abs(main) + abs(wp.log(prod))))


def log_gamma(x) -> ExtendedReal:
    """ln Gamma(x) for x > 0 (recurrence shift, then Stirling)."""
    return _log_gamma(_positive(x))


def _complex_log_gamma_unit(sign: int):
    m = 20
    z = wp.mpc(m + 1, sign)
    acc = (z - wp.mpf(1) / 2) * wp.log(z) - z + wp.log(2 * wp.pi) / 2
    zp = z
    z2 = z * z
    for k in range(1, _STIRLING_TERMS + 1):
        b = bernoulli(2 * k)
        acc += wp.mpf(b.numerator) / (b.denominator * (2 * k) * (2 * k - 1)) / zp
        zp *= z2
    k = _STIRLING_TERMS + 1
    nxt = float(abs(bernoulli(2 * k)) / Fraction(2 * k * (2 * k - 1))) / float(abs(zp))
    for k in range(1, m + 1):
        acc -= wp.log(wp.mpc(k, sign))
    return acc, nxt + 64 * UNIT_ROUNDOFF * 10


def im_log_gamma_unit(sign: int = 1) -> ExtendedReal:
    """Im ln Gamma(1 + sign*i) by downward recurrence from Stirling at 21 + sign*i."""
    if sign not in (1, -1):
        raise DomainError("sign must be +1 or -1")
    v, e = _complex_log_gamma_unit(sign)
    return ExtendedReal(v.imag, e)


@lru_cache(maxsize=1)
def im_log_gamma_one_plus_i() -> ExtendedReal:
    """Im ln Gamma(1 + i) (about -0.30164)."""
    return im_log_gamma_unit(1)


@lru_cache(maxsize=1024)
def _upper_gamma0(x) -> ExtendedReal:
    g = euler_gamma()
    if x <= 1:
        acc = -g - wp.log(x)
        term = wp.mpf(1)
        n = 1
        while True:
            term *= x / n
            t = term / n
            if t < wp.mpf(10) ** -36:
                break
            acc += t if n % 2 else -t
            n += 1
        return ExtendedReal(acc, float(t) + 8 * n * ulp_err(1))
    # modified Lentz on e^-x / (x+1 - 1/(x+3 - 4/(x+5 - ...)))
    tiny = wp.mpf(10) ** -60
    f = x + 1
    C, D = f, wp.mpf(0)
    k = 1
    delta = wp.mpf(0)
    while k < 5000:
        a = -wp.mpf(k) ** 2
        b = x + 2 * k + 1
        D = b + a * D
        D = tiny if D == 0 else D
        C = b + a / C
        C = tiny if C == 0 else C
        D = 1 / D
        delta = C * D
        f *= delta
        if abs(delta - 1) < wp.mpf(2) ** -112:
            break
        k += 1
    v = wp.exp(-x) / f
    return ExtendedReal(v, float(abs(v)) * (float(abs(delta - 1)) * 4 + 8 * k * UNIT_ROUNDOFF))


def upper_gamma0(x) -> ExtendedReal:
    """Gamma(0, x) = integral_x^inf e^-u / u du for x > 0."""
    return _upper_gamma0(_positive(x))
