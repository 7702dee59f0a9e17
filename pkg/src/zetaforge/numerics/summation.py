"""Order-independent accumulation of working-precision terms."""

from __future__ import annotations

from typing import Iterable

from mpmath.libmp import from_man_exp

from .extended import WORKING_BITS, ExtendedReal, to_mpf, ulp_err, wp

# Terms this many bits below the largest one are not shifted into the exact
# accumulator; their magnitudes are charged to the error bound instead.
_SPAN_BITS = 4 * WORKING_BITS


def compensated_sum(terms: Iterable) -> ExtendedReal:
    """Sum ``terms`` exactly and round once.

    Every finite term is decomposed into its integer mantissa and binary
    exponent and added into a single Python integer, so the result is the
    correctly rounded exact sum whatever the input order.  Error bounds of
    :class:`ExtendedReal` inputs are added to the result's bound.

    >>> float(compensated_sum([1, 1e-20, -1]))
    1e-20
    """
    parts = []
    err = 0.0
    for t in terms:
        if isinstance(t, ExtendedReal):
            v = t.value
            err += t.err
        else:
            v = to_mpf(t)
        if not wp.isfinite(v):
            raise OverflowError("magnitude overflow")
        if v:
            parts.append(v._mpf_)
    if not parts:
        return ExtendedReal(0, err)

    top = max(exp + bc for _, _, exp, bc in parts)
    floor = top - _SPAN_BITS
    kept = []
    for sign, man, exp, bc in parts:
        if exp + bc < floor:
            err += float(wp.ldexp(1, exp + bc))
        else:
            kept.append((sign, man, exp))
    emin = min(exp for _, _, exp in kept)
    acc = 0
    for sign, man, exp in kept:
        m = int(man) << (exp - emin)
        acc += -m if sign else m
    total = wp.make_mpf(from_man_exp(acc, emin, WORKING_BITS, "n"))
    return ExtendedReal(total, err + 0.5 * ulp_err(total))
