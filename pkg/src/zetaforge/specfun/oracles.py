"""Independent recomputation of the cached constants."""

from __future__ import annotations

from functools import lru_cache

from ..numerics.extended import ExtendedReal, wp
from ..numerics.tails import em_boundary
from .elementary import arccot_series, polylog_int
from .stieltjes import stieltjes_gamma1
from .zeta import zeta


@lru_cache(maxsize=1)
def machin_pi() -> ExtendedReal:
    """pi = 16 acot(5) - 4 acot(239)."""
    return arccot_series(5) * 16 - arccot_series(239) * 4


@lru_cache(maxsize=1)
def euler_gamma_oracle(N: int = 512) -> ExtendedReal:
    """gamma = lim (H_m - ln m), closing sum_{k>N} 1/k - ln(m/N) by Euler-Maclaurin."""
    acc = wp.mpf(0)
    for k in range(1, N + 1):
        acc += wp.mpf(1) / k
    # sum_{k=N+1}^m 1/k = ln(m/N) + boundary(N) + o(1)
    boundary, rem = em_boundary(1, 0, N)
    v = acc - wp.log(N) + boundary
    return ExtendedReal(v, rem + 4 * N * 2.0 ** -113)


def constant_oracles():
    return {
        "pi": machin_pi,
        "gamma": euler_gamma_oracle,
        "ln2": lambda: polylog_int(1, wp.mpf(1) / 2),
        "zeta2": lambda: machin_pi() * machin_pi() / 6,
        "zeta3": lambda: zeta(3),
        "gamma1": lambda: stieltjes_gamma1(1),
    }
