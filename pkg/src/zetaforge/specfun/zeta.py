"""Riemann, Hurwitz and alternating zeta functions on s > 1 (eta on s > 0)."""

from __future__ import annotations

from functools import lru_cache

from ..errors import DomainError
from ..numerics.extended import ExtendedReal, to_mpf, ulp_err, wp
from ..numerics.extrapolation import extrapolate
from ..numerics.tails import lattice_tail

# relative accuracy asked of the Euler-Maclaurin closure
_REL = 2.0 ** -104


def _real(x, name):
    try:
        v = to_mpf(x)
    except (TypeError, ValueError) as exc:
        raise DomainError(f"{name} must be a real number") from exc
    if not wp.isfinite(v):
        raise DomainError(f"{name} must be finite")
    return v


@lru_cache(maxsize=4096)
def _hurwitz(s, a, q: int) -> ExtendedReal:
    first = wp.log(a) ** q * wp.power(a, -s)
    tail = lattice_tail(s, 0, log_power=q, shift=a, rel_target=_REL)
    return tail + ExtendedReal(first, ulp_err(first) * 4)


def zeta(s) -> ExtendedReal:
    """Riemann zeta function for real ``s > 1``.

    >>> abs(float(zeta(2)) - 1.6449340668482264) < 1e-15
    True
    """
    s = _real(s, "s")
    if s <= 1:
        raise DomainError("zeta(s) is implemented for s > 1 only")
    return _hurwitz(s, wp.mpf(1), 0)


def zeta_minus_one(s) -> ExtendedReal:
    """zeta(s) - 1, summed without forming zeta(s) first (no cancellation)."""
    s = _real(s, "s")
    if s <= 1:
        raise DomainError("zeta(s) is implemented for s > 1 only")
    return _hurwitz(s, wp.mpf(2), 0)


def hurwitz_zeta(s, a) -> ExtendedReal:
    """zeta(s, a) = sum_{n>=0} (n+a)^-s for s > 1, a > 0."""
    s = _real(s, "s")
    a = _real(a, "a")
    if s <= 1:
        raise DomainError("hurwitz_zeta needs s > 1")
    if a <= 0:
        raise DomainError("hurwitz_zeta needs a > 0")
    return _hurwitz(s, a, 0)


def hurwitz_zeta_deriv(s, a) -> ExtendedReal:
    """Partial derivative in s of zeta(s, a): -sum ln(n+a) (n+a)^-s."""
    s = _real(s, "s")
    a = _real(a, "a")
    if s <= 1:
        raise DomainError("hurwitz_zeta_deriv needs s > 1")
    if a <= 0:
        raise DomainError("hurwitz_zeta_deriv needs a > 0")
    return -_hurwitz(s, a, 1)


_ETA_START = 64
_ETA_COUNT = 96


@lru_cache(maxsize=256)
def _eta_condensed(s) -> ExtendedReal:
    total = wp.mpf(0)
    partials = []
    for n in range(1, _ETA_START + _ETA_COUNT):
        t = wp.power(n, -s)
        total += t if n % 2 else -t
        if n >= _ETA_START:
            partials.append(total)
    out = extrapolate(partials, "alternating")
    return out.widen((_ETA_START + _ETA_COUNT) * ulp_err(total) * 4)


def dirichlet_eta(s) -> ExtendedReal:
    """Alternating zeta sum_{n>=1} (-1)^(n+1) n^-s for s > 0.

    For s > 1 this is (1 - 2^(1-s)) zeta(s); on (0, 1] the alternating
    partial sums are condensed by repeated averaging.
    """
    s = _real(s, "s")
    if s <= 0:
        raise DomainError("dirichlet_eta needs s > 0")
    if s > 1:
        factor = 1 - wp.power(2, 1 - s)
        return zeta(s) * ExtendedReal(factor, 2 * ulp_err(factor) + ulp_err(1))
    return _eta_condensed(s)


def eta_alternating(s) -> ExtendedReal:
    """Alternating zeta from Boole summation of the signed series itself.

    Independent of :func:`zeta`; used to cross-check the factor formula.
    """
    s = _real(s, "s")
    if s <= 0:
        raise DomainError("eta needs s > 0")
    # sum_{n>=1} (-1)^(n+1) n^-s = -sum_{n>0} (-1)^n n^-s
    return -lattice_tail(s, 0, alternating=True, rel_target=_REL)
