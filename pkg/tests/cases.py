"""Shared test cases: the tail operations and a direct summation reference."""

from zetaforge.numerics import (harmonic_tail, lattice_tail, log_zeta_tail,
                                weighted_harmonic_tail, wp, zeta_tail)
from zetaforge.numerics.extended import UNIT_ROUNDOFF

CUTS = (100, 1000, 10 ** 4)


def direct_sum(f, lo, hi):
    return sum(f(n) for n in range(lo + 1, hi + 1))


def _harmonic_weighted(j, shift=0):
    def f(n):
        y = wp.mpf(n) + shift
        return (wp.digamma(y + 1) + wp.euler) * wp.power(y, -j)
    return f


TAIL_OPS = [
    ("zeta_tail(2)", lambda N: zeta_tail(2, N), lambda n: wp.mpf(1) / (n * n)),
    ("zeta_tail(3.5)", lambda N: zeta_tail(3.5, N), lambda n: wp.power(n, -3.5)),
    ("log_zeta_tail(2)", lambda N: log_zeta_tail(2, N), lambda n: wp.log(n) / (n * n)),
    ("harmonic_tail(2)", lambda N: harmonic_tail(2, N), _harmonic_weighted(2)),
    ("weighted_harmonic_tail(2.5, shift=1/2)",
     lambda N: weighted_harmonic_tail(2.5, N, shift=wp.mpf(1) / 2),
     _harmonic_weighted(2.5, wp.mpf(1) / 2)),
    ("alternating lattice_tail(1/2)",
     lambda N: lattice_tail(wp.mpf(1) / 2, N, alternating=True),
     lambda n: (-1) ** n / wp.sqrt(n)),
    ("lattice_tail(2, log^2, shift=3/4)",
     lambda N: lattice_tail(2, N, log_power=2, shift=wp.mpf(3) / 4),
     lambda n: wp.log(n + wp.mpf(3) / 4) ** 2 / (n + wp.mpf(3) / 4) ** 2),
]


def tail_inconsistencies(tail, term, cuts=CUTS):
    """Pairs of cuts where tail(N1) != direct(N1..N2) + tail(N2) beyond both error bounds."""
    tails = {N: tail(N) for N in cuts}
    bad = []
    for i, N1 in enumerate(cuts):
        for N2 in cuts[i + 1:]:
            lhs = direct_sum(term, N1, N2) + tails[N2].value
            budget = tails[N1].err + tails[N2].err + (N2 - N1) * 8 * UNIT_ROUNDOFF
            if abs(lhs - tails[N1].value) > budget:
                bad.append((N1, N2))
    return bad
