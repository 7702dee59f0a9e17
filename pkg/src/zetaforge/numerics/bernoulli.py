"""Exact Bernoulli numbers (convention B1 = -1/2)."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb


@lru_cache(maxsize=None)
def _table(n: int) -> tuple:
    b = [Fraction(1)]
    for m in range(1, n + 1):
        acc = sum(comb(m + 1, k) * b[k] for k in range(m))
        b.append(-acc / (m + 1))
    return tuple(b)


def bernoulli(n: int) -> Fraction:
    if n < 0:
        raise ValueError("Bernoulli index must be nonnegative")
    return _table(max(n, 32))[n] if n <= 32 else _table(n)[n]
