"""Integer-order polylogarithm and the arc-cotangent series."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from ..errors import DomainError
from ..numerics.bernoulli import bernoulli
from ..numerics.extended import ExtendedReal, to_mpf, ulp_err, wp
from ..numerics.extrapolation import extrapolate
from .zeta import _real, dirichlet_eta, zeta

_TINY = wp.mpf(2) ** -124


def _zeta_int(m: int) -> ExtendedReal:
    """zeta at an integer m != 1, using Bernoulli numbers for m <= 0."""
    if m >= 2:
        return zeta(m)
    if m == 0:
        return ExtendedReal(wp.mpf(-1) / 2)
    b = -bernoulli(1 - m) / Fraction(1 - m)
    return ExtendedReal.coerce(b)


@lru_cache(maxsize=1024)
def _polylog(k: int, t) -> ExtendedReal:
    if t == 1:
        return zeta(k) if k > 1 else None
    if t == -1:
        return -dirichlet_eta(k)
    if t == 0:
        return ExtendedReal(0)
    if k == 1:
        v = -wp.log1p(-t)
        return ExtendedReal(v, 4 * ulp_err(v))
    at = abs(t)
    if at <= wp.mpf(1) / 2:
        acc = wp.mpf(0)
        p = wp.mpf(1)
        n = 1
        while True:
            p *= t
            term = p / wp.mpf(n) ** k
            acc += term
            bound = abs(p * t) / wp.mpf(n + 1) ** k / (1 - at)
            if bound < _TINY * max(abs(acc), _TINY):
                break
            n += 1
        return ExtendedReal(acc, float(bound) + 4 * n * ulp_err(acc))
    if t < 0:
        # Li_k(t) = 2^(1-k) Li_k(t^2) - Li_k(-t)
        return _polylog(k, t * t) * wp.power(2, 1 - k) - _polylog(k, -t)
    # t in (1/2, 1): expansion in mu = ln t about the singular point
    mu = wp.log(t)
    acc = ExtendedReal(0)
    fact = wp.mpf(1)
    mupow = wp.mpf(1)
    n = 0
    tol = 2.0 ** -118
    while True:
        if n > 0:
            fact *= n
            mupow *= mu
        if n == k - 1:
            h = sum((Fraction(1, i) for i in range(1, k)), Fraction(0))
            special = mupow / fact * (to_mpf(h) - wp.log(-mu))
            acc = acc + ExtendedReal(special, 8 * ulp_err(special))
            n += 1
            continue
        z = _zeta_int(k - n)
        if z.value == 0:
            n += 1
            continue
        term = z * (mupow / fact)
        acc = acc + term
        if n > k + 2 and float(abs(term.value)) < tol:
            break
        n += 1
    # terms shrink at least like (|mu| / 2 pi)^n, |mu| < ln 2
    return acc.widen(2 * abs(float(term.value)) + 1e-35)


def polylog_int(k: int, t) -> ExtendedReal:
    """Li_k(t) = sum_{n>=1} t^n / n^k for integer k >= 1 and |t| <= 1.

    >>> abs(float(polylog_int(1, 0.5)) - 0.6931471805599453) < 1e-15
    True
    """
    if int(k) != k or k < 1:
        raise DomainError("polylog_int needs an integer order k >= 1")
    k = int(k)
    t = _real(t, "t")
    if abs(t) > 1:
        raise DomainError("polylog_int needs |t| <= 1")
    if k == 1 and t == 1:
        raise DomainError("Li_1 diverges at t = 1")
    return _polylog(k, t)


_CONDENSE_TERMS = 128
_DIRECT_FROM = 1.01


@lru_cache(maxsize=1024)
def _arccot(x, terms):
    inv = 1 / x
    inv2 = inv * inv
    # direct summation while it needs at most a few thousand terms
    if terms is not None or x >= _DIRECT_FROM:
        acc = wp.mpf(0)
        p = inv
        k = 0
        while True:
            term = p / (2 * k + 1)
            if terms is not None:
                if k >= terms:
                    break
            elif term < _TINY:
                break
            acc += term if k % 2 == 0 else -term
            p *= inv2
            k += 1
        return ExtendedReal(acc, float(term) + 4 * (k + 1) * ulp_err(acc))
    # 1 <= x < 2: condense the alternating partial sums
    partials = []
    acc = wp.mpf(0)
    p = inv
    for k in range(_CONDENSE_TERMS):
        term = p / (2 * k + 1)
        acc += term if k % 2 == 0 else -term
        partials.append(acc)
        p *= inv2
    return extrapolate(partials, "alternating").widen(4 * _CONDENSE_TERMS * ulp_err(acc))


def arccot_series(x, terms=None) -> ExtendedReal:
    """cot^-1(x) = sum_k (-1)^k / ((2k+1) x^(2k+1)) for x >= 1.

    With ``terms`` given, exactly that many terms are summed and the error
    bound is the first omitted term.
    """
    x = _real(x, "x")
    if x < 1:
        raise DomainError("arccot series needs x >= 1")
    if terms is not None:
        terms = int(terms)
        if terms < 1:
            raise DomainError("terms must be positive")
    return _arccot(x, terms)
