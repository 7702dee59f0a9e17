"""Evaluators for both sides of the registered identities.

Each function returns an :class:`ExtendedReal` accurate to the ``eps`` it
is given.  Series are summed term by term as written and closed with a tail
model built from the summand's expansion in inverse powers of the index.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Callable, Optional, Sequence, Tuple

from ..constants import constants
from ..errors import ConvergenceError
from ..nielsen import xi_mean_integral, xi_series
from ..numerics.expansions import InverseSeries, combine_models
from ..numerics.extended import ExtendedReal, to_mpf, wp
from ..numerics.series import SeriesSpec, capped_cache, sum_series
from ..quad import (IntegralSpec, integrate_finite, integrate_log_oscillatory,
                    integrate_semi_infinite)
from ..specfun import (digamma, harmonic_number, im_log_gamma_one_plus_i, log_gamma,
                       polylog_int, upper_gamma0, zeta, zeta_minus_one)


def const(name: str) -> ExtendedReal:
    return constants()[name]


def _x(v) -> ExtendedReal:
    return ExtendedReal.rounded(to_mpf(v))


# ---------------------------------------------------------------------------
# summation helpers


def geometric_outer(summand: Callable[[int], ExtendedReal], k0: int, eps: float,
                    step: int = 1, k_max: int = 2000) -> ExtendedReal:
    """Sum ``summand(k0) + summand(k0 + step) + ...`` for geometrically shrinking terms.

    Stops once three consecutive term ratios stay below 0.9 and the
    geometric bound on the rest, with the ratio inflated by 10%, is below
    ``eps / 4``.
    """
    total = ExtendedReal(0)
    prev = None
    ratios = []
    k = k0
    while k <= k_max:
        t = summand(k)
        total = total + t
        mag = abs(t.value)
        if prev is not None and prev != 0:
            ratios.append(float(mag / prev))
        if mag == 0 and t.err < eps / 8 and k > k0 + 3 * step:
            return total
        if len(ratios) >= 3:
            r = max(ratios[-3:]) * 1.1
            if r < 0.9:
                bound = float(mag) * r / (1 - r)
                if bound < eps / 4:
                    return total.widen(bound)
        prev = mag
        k += step
    raise ConvergenceError("outer sum did not reach a geometric regime")


def plain_spec(term: Callable[[int], object], n0: int, expansion: InverseSeries,
               alternating: bool = False) -> SeriesSpec:
    """sum_{n >= n0} term(n) with term(n) ~ [(-1)^n] expansion(n)."""
    model = expansion.tail_model("power", alternating=alternating)
    return SeriesSpec(term, n0, model, kind="alternating" if alternating else "general")


def plain_series(term: Callable[[int], object], n0: int, expansion: InverseSeries, eps: float,
                 alternating: bool = False) -> ExtendedReal:
    return sum_series(plain_spec(term, n0, expansion, alternating), eps)


def harmonic_spec(term: Callable[[int, object], object], n0: int, weighted: InverseSeries,
                  plain: Optional[InverseSeries] = None) -> SeriesSpec:
    """sum_{n >= n0} term(n, H_n) with term ~ H_n weighted(n) + plain(n)."""
    parts = [weighted.tail_model("harmonic")]
    if plain is not None:
        parts.append(plain.tail_model("power"))
    model = combine_models(*parts)
    init = harmonic_number(n0 - 1).value if n0 > 1 else 0
    return SeriesSpec(term, n0, model, weight="harmonic", weight_init=init)


def harmonic_series(term: Callable[[int, object], object], n0: int, weighted: InverseSeries,
                    eps: float, plain: Optional[InverseSeries] = None) -> ExtendedReal:
    return sum_series(harmonic_spec(term, n0, weighted, plain), eps)


def _mono(p, c=1):
    return InverseSeries.monomial(p, c)


def _atanh_inv():
    """atanh(1/y) = (ln(1 + 1/y) - ln(1 - 1/y)) / 2."""
    return (InverseSeries.log1p(1) - InverseSeries.log1p(-1)).scale(wp.mpf(1) / 2)


# ---------------------------------------------------------------------------
# zeta-product sums (outer sums over k)


def zeta_product_sum(k: int) -> ExtendedReal:
    """sum_{m=1}^{k-2} zeta(k-m) zeta(m+1)."""
    acc = ExtendedReal(0)
    for m in range(1, k - 1):
        acc = acc + zeta(k - m) * zeta(m + 1)
    return acc


def alternating_zeta_product_sum(k: int) -> ExtendedReal:
    """sum_{l=1}^{k-2} (-1)^(l+1) zeta(l+1) zeta(k-l)."""
    acc = ExtendedReal(0)
    for l in range(1, k - 1):
        p = zeta(l + 1) * zeta(k - l)
        acc = acc + p if l % 2 else acc - p
    return acc


def e1_1_lhs(eps: float) -> ExtendedReal:
    return geometric_outer(lambda k: (zeta_product_sum(k) - k) / k, 3, eps)


def e1_1_rhs() -> ExtendedReal:
    g = const("gamma")
    return ExtendedReal(3) + g * g + const("gamma1") * 2 - const("pi") * const("pi") / 3


def e1_29_lhs(eps: float) -> ExtendedReal:
    return geometric_outer(lambda k: (zeta_product_sum(k) - k) * _sign(k) / k, 3, eps)


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


def _odd_bracket(r: int) -> ExtendedReal:
    return alternating_zeta_product_sum(2 * r + 1) - 2


def e1_13_lhs(eps: float) -> ExtendedReal:
    return geometric_outer(lambda r: _odd_bracket(r) / (2 * r + 1), 1, eps)


def e1_38_lhs(eps: float) -> ExtendedReal:
    return geometric_outer(lambda r: _odd_bracket(r) * _sign(r) / (2 * r + 1), 1, eps)


# ---------------------------------------------------------------------------
# recurring single series


@capped_cache(maxsize=None)
def log_ratio_over_n(eps: float) -> ExtendedReal:
    """sum_{n>=2} ln((n+1)/n) / n."""
    return plain_series(lambda n: wp.log1p(wp.mpf(1) / n) / n, 2,
                        InverseSeries.log1p(1) * _mono(1), eps)


@capped_cache(maxsize=None)
def log_ratio_prev_over_n(eps: float) -> ExtendedReal:
    """sum_{n>=2} ln(n/(n-1)) / n."""
    return plain_series(lambda n: -wp.log1p(-wp.mpf(1) / n) / n, 2,
                        InverseSeries.log1p(-1).scale(-1) * _mono(1), eps)


@capped_cache(maxsize=None)
def arccot_over_l(eps: float) -> ExtendedReal:
    """sum_{l>=2} arccot(l) / l."""
    return plain_series(lambda l: wp.atan(wp.mpf(1) / l) / l, 2,
                        InverseSeries.arctan_inverse(0) * _mono(1), eps)


@capped_cache(maxsize=None)
def harmonic_arccot(eps: float) -> ExtendedReal:
    """sum_{n>=2} H_{n-1} (arccot(n) - 1/n)."""
    d = InverseSeries.arctan_inverse(0) - _mono(1)

    def term(n, h):
        return (h - wp.mpf(1) / n) * (wp.atan(wp.mpf(1) / n) - wp.mpf(1) / n)

    return harmonic_series(term, 2, d, eps, plain=(d * _mono(1)).scale(-1))


# ---------------------------------------------------------------------------
# harmonic-weighted power sums


@capped_cache(maxsize=None)
def psi_power_sum(k: int, eps: float) -> ExtendedReal:
    """sum_{n>=1} psi(n) / n^k with psi(n) = H_n - 1/n - gamma."""
    g = const("gamma")
    gv = g.value

    def term(n, h):
        return (h - wp.mpf(1) / n - gv) / wp.power(n, k)

    plain = (_mono(k + 1) + _mono(k, gv)).scale(-1)
    out = harmonic_series(term, 1, _mono(k), eps, plain=plain)
    return out.widen(2 * g.err)


def e1_2_lhs(k: int, eps: float) -> ExtendedReal:
    return psi_power_sum(k, eps) * 2


def e1_2_rhs(k: int) -> ExtendedReal:
    return (zeta(k + 1) * k - const("gamma") * zeta(k) * 2
            - _zeta_pair_sum(k))


def _zeta_pair_sum(k: int) -> ExtendedReal:
    """sum_{l=1}^{k-2} zeta(l+1) zeta(k-l)."""
    acc = ExtendedReal(0)
    for l in range(1, k - 1):
        acc = acc + zeta(l + 1) * zeta(k - l)
    return acc


def e1_14_lhs(k: int) -> ExtendedReal:
    return alternating_zeta_product_sum(k)


def e1_14_rhs(k: int, eps: float) -> ExtendedReal:
    return psi_power_sum(k, eps) * 2 + zeta(k + 1) * 2 + const("gamma") * zeta(k) * 2


# ---------------------------------------------------------------------------
# the four series that assemble the zeta-product double sum


def e1_4_ksum(eps: float) -> ExtendedReal:
    return geometric_outer(lambda k: zeta_minus_one(k) / k, 3, eps)


def _e1_4_term(r):
    r = wp.mpf(r)
    return -wp.log1p(-1 / r) - 1 / (2 * r * r) - 1 / r


def e1_4_spec() -> SeriesSpec:
    """sum_{r>=2} [ln(r/(r-1)) - 1/(2r^2) - 1/r]."""
    exp = InverseSeries.log1p(-1).scale(-1) - _mono(2, wp.mpf(1) / 2) - _mono(1)
    return plain_spec(_e1_4_term, 2, exp)


@capped_cache(maxsize=None)
def e1_4_rsum(eps: float) -> ExtendedReal:
    return sum_series(e1_4_spec(), eps)


def e1_4_closed() -> ExtendedReal:
    return ExtendedReal(wp.mpf(3) / 2) - const("gamma") - const("zeta2") / 2


def e1_5_ksum(eps: float) -> ExtendedReal:
    return geometric_outer(lambda k: zeta_minus_one(k + 1), 3, eps)


def _e1_5_term(r):
    return 1 / ((wp.mpf(r) - 1) * wp.power(r, 3))


def e1_5_spec() -> SeriesSpec:
    """sum_{r>=2} 1 / ((r-1) r^3)."""
    return plain_spec(_e1_5_term, 2, InverseSeries.shifted_power(1, -1) * _mono(3))


@capped_cache(maxsize=None)
def e1_5_rsum(eps: float) -> ExtendedReal:
    return sum_series(e1_5_spec(), eps)


def e1_5_closed() -> ExtendedReal:
    return ExtendedReal(3) - const("zeta2") - const("zeta3")


def _e1_8_term(n):
    return -wp.log1p(-wp.mpf(1) / n) - wp.mpf(1) / n


def e1_8_spec() -> SeriesSpec:
    """sum_{n>=2} [ln(n/(n-1)) - 1/n]."""
    return plain_spec(_e1_8_term, 2, InverseSeries.log1p(-1).scale(-1) - _mono(1))


@capped_cache(maxsize=None)
def e1_8_series(eps: float) -> ExtendedReal:
    return sum_series(e1_8_spec(), eps)


def _e1_10_term(n, h):
    return h * (wp.log1p(wp.mpf(1) / n) - wp.mpf(1) / (n + 1))


def e1_10_spec() -> SeriesSpec:
    """sum_{n>=1} H_n [ln((n+1)/n) - 1/(n+1)]."""
    d = InverseSeries.log1p(1) - InverseSeries.shifted_power(1, 1)
    return harmonic_spec(_e1_10_term, 1, d)


@capped_cache(maxsize=None)
def e1_10_series(eps: float) -> ExtendedReal:
    return sum_series(e1_10_spec(), eps)


@capped_cache(maxsize=None)
def e1_10_split(eps: float) -> ExtendedReal:
    """sum_{n>=1} H_n [ln((n+1)/n) - 1/n] + zeta(2)."""
    d = InverseSeries.log1p(1) - _mono(1)

    def term(n, h):
        return h * (wp.log1p(wp.mpf(1) / n) - wp.mpf(1) / n)

    return harmonic_series(term, 1, d, eps) + zeta(2)


def e1_10_closed() -> ExtendedReal:
    g = const("gamma")
    return const("zeta2") / 2 - g * g / 2 - const("gamma1")


def assemble_e1_1(eps: float = 1e-14):
    """Compose the E1.4, E1.5, E1.8 and E1.10 series values into the E1.1 sum.

    Returns ``(assembled, closed)`` where ``closed = 3 - 2 zeta(2) + gamma^2 + 2 gamma_1``.
    The only closed forms used in the assembly are the two Euler sums
    ``sum H_{n-1}/n^2 = zeta(3)`` and ``sum 1/n^2 = zeta(2)``.
    """
    g = const("gamma")
    z2, z3 = const("zeta2"), const("zeta3")
    a4 = e1_4_rsum(eps)
    a5 = e1_5_rsum(eps)
    a8 = e1_8_series(eps)
    a10 = e1_10_series(eps)
    # sum_k (1/k) sum_{n>=2} (H_{n-1} - gamma)/n^k
    inner = (g * z2 / 2 - z3 / 2 - g / 2) + a10 - g * a8
    assembled = a5 - g * a4 * 2 - inner * 2
    closed = ExtendedReal(3) - z2 * 2 + g * g + const("gamma1") * 2
    return assembled, closed


# ---------------------------------------------------------------------------
# polylogarithm integrals


def e1_12_integral(k: int, eps: float) -> ExtendedReal:
    zk = zeta(k).value

    def f(t):
        return (polylog_int(k, t).value - t * zk) / (t * (t - 1))

    val = integrate_finite(IntegralSpec(f, ("finite", 0, 1), {"log_at_1"}), eps / 4)
    return val.widen(zeta(k).err) * 2


def e1_12_rhs(k: int) -> ExtendedReal:
    return zeta(k + 1) * k - _zeta_pair_sum(k)


# ---------------------------------------------------------------------------
# right sides of the three product-sum identities


def e1_13_rhs(eps: float) -> ExtendedReal:
    g = const("gamma")
    return (log_ratio_prev_over_n(eps) + 2 - const("zeta2") - const("gamma1") * 2 - g * g
            - const("ln2"))


def e1_29_rhs(eps: float) -> ExtendedReal:
    g = const("gamma")
    s = log_ratio_over_n(eps) + const("ln2")
    return const("zeta2") * 2 - wp.mpf(1) / 2 - const("gamma1") * 2 - g * g - s * 2


def e1_38_rhs(eps: float) -> ExtendedReal:
    return (arccot_over_l(eps) * 2 - const("zeta2") * 2 + 2 + harmonic_arccot(eps) * 2)


# ---------------------------------------------------------------------------
# odd and even zeta values over odd denominators


def odd_zeta_tsum(t, eps: float) -> ExtendedReal:
    """sum_{r>=1} [zeta(2r+1) - 1] t^(2r+1) / (2r+1)."""
    t = to_mpf(t)
    return geometric_outer(lambda r: zeta_minus_one(2 * r + 1) * _x(wp.power(t, 2 * r + 1) / (2 * r + 1)),
                           1, eps)


@capped_cache(maxsize=None)
def e1_17_spec() -> SeriesSpec:
    """sum_{l>=2} [ln((l+1)/(l-1))/2 - 1/l]."""
    return plain_spec(lambda l: wp.atanh(wp.mpf(1) / l) - wp.mpf(1) / l, 2,
                      _atanh_inv() - _mono(1))


def e1_17_lsum(eps: float) -> ExtendedReal:
    return sum_series(e1_17_spec(), eps)


def e1_17_closed() -> ExtendedReal:
    return ExtendedReal(1) - const("gamma") - const("ln2") / 2


def e1_24_rhs(t) -> ExtendedReal:
    t = to_mpf(t)
    return (log_gamma(2 - t) - log_gamma(2 + t)) / 2 + (ExtendedReal(1) - const("gamma")) * _x(t)


def even_zeta_over_odd(eps: float) -> ExtendedReal:
    """sum_{r>=1} [zeta(2r+2) - 1] / (2r+1)."""
    return geometric_outer(lambda r: zeta_minus_one(2 * r + 2) / (2 * r + 1), 1, eps)


@capped_cache(maxsize=None)
def e1_18_coth(eps: float) -> ExtendedReal:
    """sum_{l>=2} (1/l) [arccoth(l) - 1/l]."""
    return plain_series(lambda l: (wp.atanh(wp.mpf(1) / l) - wp.mpf(1) / l) / l, 2,
                        (_atanh_inv() - _mono(1)) * _mono(1), eps)


@capped_cache(maxsize=None)
def log_ratio_sym_over_l(eps: float) -> ExtendedReal:
    """sum_{l>=2} (1/l) ln((l+1)/(l-1))."""
    return plain_series(lambda l: 2 * wp.atanh(wp.mpf(1) / l) / l, 2,
                        _atanh_inv().scale(2) * _mono(1), eps)


def e1_18_logs(eps: float) -> ExtendedReal:
    return log_ratio_sym_over_l(eps) / 2 - const("zeta2") + 1


@capped_cache(maxsize=None)
def e1_20_lhs(eps: float) -> ExtendedReal:
    """sum_{n>=2} H_{n-1} [ln((n+1)/(n-1))/2 - 1/n]."""
    d = _atanh_inv() - _mono(1)

    def term(n, h):
        inv = wp.mpf(1) / n
        return (h - inv) * (wp.atanh(inv) - inv)

    return harmonic_series(term, 2, d, eps, plain=(d * _mono(1)).scale(-1))


def e1_20_rhs(eps: float) -> ExtendedReal:
    g = const("gamma")
    return (const("zeta2") / 2 - const("gamma1") - g * g / 2 - log_ratio_over_n(eps) / 2
            - const("ln2") / 2)


def e1_25_integral(eps: float) -> ExtendedReal:
    def f(t):
        return (digamma(2 + t) - digamma(2 - t)) / _x(t)

    return integrate_finite(IntegralSpec(f, ("finite", 0, 1)), eps)


# ---------------------------------------------------------------------------
# alternating zeta sums and log moments


def alternating_zeta_over_k(eps: float) -> ExtendedReal:
    """sum_{k>=1} (-1)^(k+1) [zeta(k+1) - 1] / k."""
    return geometric_outer(lambda k: zeta_minus_one(k + 1) * (-_sign(k)) / k, 1, eps)


def e1_26_exp_integral(eps: float) -> ExtendedReal:
    g = const("gamma").value

    def f(t):
        return (g + upper_gamma0(t).value + wp.log(t)) / wp.expm1(t)

    val = integrate_semi_infinite(IntegralSpec(f, ("semi_infinite", 0)), eps / 2)
    return val.widen(2 * const("gamma").err) - const("ln2")


def e1_26_unit_integral(eps: float) -> ExtendedReal:
    def f(t):
        return (t - 1) / wp.log(t) * (-1 - wp.log1p(-t) / t)

    return integrate_finite(IntegralSpec(f, ("finite", 0, 1), {"log_at_0", "log_at_1"}), eps)


def e1_27_integral(n: int, eps: float) -> ExtendedReal:
    def f(t):
        return wp.power(t, n - 1) * (t - 1) / wp.log(t)

    return integrate_finite(IntegralSpec(f, ("finite", 0, 1), {"log_at_0"}), eps)


def e1_27_log(n: int) -> ExtendedReal:
    return _x(wp.log1p(wp.mpf(1) / n))


# ---------------------------------------------------------------------------
# generating functions in t


def e1_31_ksum(eps: float) -> ExtendedReal:
    return geometric_outer(lambda k: zeta_minus_one(k + 1) * _sign(k), 3, eps)


def e1_31_closed() -> ExtendedReal:
    return const("zeta2") - wp.mpf(1) / 2 - const("zeta3")


def e1_32_ksum(t, eps: float) -> ExtendedReal:
    t = to_mpf(t)
    return geometric_outer(lambda k: zeta_minus_one(k + 1) * _x(wp.power(t, k)), 1, eps)


def e1_32_rhs(t) -> ExtendedReal:
    t = to_mpf(t)
    return _x(t / (t - 1)) - const("gamma") - digamma(1 - t)


def e1_33_ksum(eps: float) -> ExtendedReal:
    return geometric_outer(lambda k: zeta_minus_one(k) * _sign(k) / k, 3, eps)


def e1_33_closed() -> ExtendedReal:
    return const("ln2") - wp.mpf(1) / 2 + const("gamma") - const("zeta2") / 2


def e1_34_ksum(t, eps: float) -> ExtendedReal:
    t = to_mpf(t)
    return geometric_outer(lambda k: zeta_minus_one(k) * _x(wp.power(t, k) / k), 2, eps)


def e1_34_rhs(t) -> ExtendedReal:
    t = to_mpf(t)
    return (ExtendedReal(1) - const("gamma")) * _x(t) + _x(wp.log1p(-t)) + log_gamma(1 - t)


def _e1_36_expansion():
    return InverseSeries.log1p(1).scale(-1) + _mono(1) - _mono(2, wp.mpf(1) / 2)


def _e1_36_term(n):
    n = wp.mpf(n)
    return -wp.log1p(1 / n) + 1 / n - 1 / (2 * n * n)


def e1_36_spec() -> SeriesSpec:
    """sum_{n>=2} [ln(n/(n+1)) + 1/n - 1/(2n^2)]."""
    return plain_spec(_e1_36_term, 2, _e1_36_expansion())


@capped_cache(maxsize=None)
def e1_36_series(eps: float) -> ExtendedReal:
    return sum_series(e1_36_spec(), eps)


def e1_36_closed() -> ExtendedReal:
    return const("gamma") - wp.mpf(1) / 2 - const("zeta2") / 2 + const("ln2")


@capped_cache(maxsize=None)
def e1_37_lhs(eps: float) -> ExtendedReal:
    """sum_{n>=2} H_{n-1} [ln(n/(n+1)) + 1/n - 1/(2n^2)]."""
    d = _e1_36_expansion()
    return harmonic_series(lambda n, h: (h - wp.mpf(1) / n) * _e1_36_term(n), 2, d, eps,
                           plain=(d * _mono(1)).scale(-1))


def e1_37_middle(eps: float) -> ExtendedReal:
    g = const("gamma")
    # sum_{n>=1} (1/n) [-ln((n+1)/n) + 1/n - 1/(2n^2)]
    s = plain_series(lambda n: _e1_36_term(n) / n, 1, _e1_36_expansion() * _mono(1), eps)
    return const("zeta2") / 2 + const("gamma1") + g * g / 2 - const("zeta3") - s


def e1_37_rhs(eps: float) -> ExtendedReal:
    g = const("gamma")
    return (-const("zeta2") / 2 + const("gamma1") + g * g / 2 - const("zeta3") / 2
            + const("ln2") + log_ratio_over_n(eps))


# ---------------------------------------------------------------------------
# arctangent and arccotangent sums, log-oscillatory integrals


def e1_41_rsum(eps: float) -> ExtendedReal:
    return geometric_outer(lambda r: zeta_minus_one(2 * r + 1) * _sign(r) / (2 * r + 1), 1, eps)


def e1_41_rhs() -> ExtendedReal:
    # (i/2) ln(Gamma(1+i)/Gamma(1-i)) = -Im ln Gamma(1+i)
    return ExtendedReal(1) - const("gamma") - const("pi") / 4 - im_log_gamma_one_plus_i()


def e1_42_rsum(eps: float) -> ExtendedReal:
    return geometric_outer(lambda r: zeta_minus_one(2 * r + 2) * _sign(r) / (2 * r + 1), 1, eps)


@capped_cache(maxsize=None)
def e1_42_lsum(eps: float) -> ExtendedReal:
    """sum_{l>=2} (1/l) [arccot(l) - 1/l]."""
    exp = (InverseSeries.arctan_inverse(0) - _mono(1)) * _mono(1)
    return plain_series(lambda l: (wp.atan(wp.mpf(1) / l) - wp.mpf(1) / l) / l, 2, exp, eps)


def e1_42_closed(eps: float) -> ExtendedReal:
    return arccot_over_l(eps) - const("zeta2") + 1


def weighted_arccot_sum(z, eps: float) -> ExtendedReal:
    """sum_{l>=2} z^l arccot(l) / l for |z| <= 1."""
    z = to_mpf(z)
    if z == 1:
        return arccot_over_l(eps)
    if z == -1:
        exp = InverseSeries.arctan_inverse(0) * _mono(1)

        def term(l):
            v = wp.atan(wp.mpf(1) / l) / l
            return -v if l % 2 else v

        return plain_series(term, 2, exp, eps, alternating=True)
    if abs(z) > wp.mpf(3) / 4:
        raise ValueError("weighted_arccot_sum samples |z| <= 3/4 or z = +-1")
    return geometric_outer(lambda l: _x(wp.power(z, l) * wp.atan(wp.mpf(1) / l) / l), 2, eps)


def arccot_weight_integral(z, eps: float) -> ExtendedReal:
    z = to_mpf(z)

    def f(t):
        L = wp.log(t)
        return -wp.sin(L) / (t * L) * wp.log1p(-z * t)

    val = integrate_log_oscillatory(IntegralSpec(f, ("finite", 0, 1)), eps / 2)
    return val - const("pi") / 4 * _x(z)


def harmonic_arccot_integral(eps: float) -> ExtendedReal:
    return arccot_weight_integral(1, eps) + const("pi") / 4


@capped_cache(maxsize=None)
def harmonic_arccot_series(eps: float) -> ExtendedReal:
    """sum_{l>=1} H_l [arccot(l) - arccot(l+1)]."""
    d = InverseSeries.arctan_inverse(0) - InverseSeries.arctan_inverse(1)
    return harmonic_series(lambda l, h: h * (wp.atan(wp.mpf(1) / l) - wp.atan(wp.mpf(1) / (l + 1))),
                           1, d, eps)


def log_ratio_power_sum(a, x, y, eps: float) -> ExtendedReal:
    """sum_{k>=1} a^k ln((x+k)/(y+k)) / k."""
    a, x, y = to_mpf(a), to_mpf(x), to_mpf(y)

    def core(k):
        return (wp.log1p(x / k) - wp.log1p(y / k)) / k

    exp = (InverseSeries.log1p(x) - InverseSeries.log1p(y)) * _mono(1)
    if a == 1:
        return plain_series(core, 1, exp, eps)
    if a == -1:
        return plain_series(lambda k: -core(k) if k % 2 else core(k), 1, exp, eps, alternating=True)
    if abs(a) > wp.mpf(3) / 4:
        raise ValueError("log_ratio_power_sum samples |a| <= 3/4 or a = +-1")
    return geometric_outer(lambda k: _x(wp.power(a, k) * core(k)), 1, eps)


def log_ratio_power_integral(a, x, y, eps: float) -> ExtendedReal:
    a, x, y = to_mpf(a), to_mpf(x), to_mpf(y)

    def f(t):
        return -(wp.power(t, x) - wp.power(t, y)) / (t * wp.log(t)) * wp.log1p(-a * t)

    return integrate_finite(IntegralSpec(f, ("finite", 0, 1), {"log_at_0", "log_at_1"}), eps)


def sine_laplace(k, eps: float) -> ExtendedReal:
    """integral_0^inf sin(u)/u e^(-k u) du, split at the zeros of sin."""
    k = to_mpf(k)

    def f(u):
        if u == 0:
            return wp.mpf(1)
        return wp.sin(u) / u * wp.exp(-k * u)

    return integrate_semi_infinite(IntegralSpec(f, ("semi_infinite", 0), period=wp.pi), eps)


def sine_log_moment(k, eps: float) -> ExtendedReal:
    """integral_0^1 sin(ln t)/ln t t^(k-1) dt."""
    k = to_mpf(k)

    def f(t):
        L = wp.log(t)
        return wp.sin(L) / L * wp.power(t, k - 1)

    return integrate_log_oscillatory(IntegralSpec(f, ("finite", 0, 1)), eps)


# ---------------------------------------------------------------------------
# xi and its integrals


def xi_t_integral(x, eps: float) -> ExtendedReal:
    """integral_0^inf [e^((1-x)t) - 1] ln(1 - e^-t) / (1 - e^t) dt."""
    x = to_mpf(x)

    def f(t):
        return wp.expm1((1 - x) * t) * wp.log(-wp.expm1(-t)) / (-wp.expm1(t))

    return integrate_semi_infinite(IntegralSpec(f, ("semi_infinite", 0)), eps)


def xi_mean_t_integral(eps: float) -> ExtendedReal:
    """-integral_0^inf [1/t + 1/(1 - e^t)] ln(1 - e^-t) dt."""
    def f(t):
        return -(1 / t - 1 / wp.expm1(t)) * wp.log(-wp.expm1(-t))

    return integrate_semi_infinite(IntegralSpec(f, ("semi_infinite", 0)), eps)


def xi_mean_u_integral(eps: float) -> ExtendedReal:
    return xi_mean_integral()


def xi_mean_quadrature(eps: float) -> ExtendedReal:
    """integral_0^1 xi(x) dx with xi summed at each Gauss node."""
    def f(x):
        return xi_series(x)

    return integrate_finite(IntegralSpec(f, ("finite", 0, 1)), eps)


def xi_mean_closed() -> ExtendedReal:
    g = const("gamma")
    return (const("zeta2") - g * g - const("gamma1") * 2) / 2


def xi_zero_t_integral(eps: float) -> ExtendedReal:
    return -integrate_semi_infinite(
        IntegralSpec(lambda t: wp.log(-wp.expm1(-t)), ("semi_infinite", 0)), eps)


def xi_zero_u_integral(eps: float) -> ExtendedReal:
    return -integrate_finite(
        IntegralSpec(lambda u: wp.log1p(-u) / u, ("finite", 0, 1), {"log_at_1"}), eps)


def nielsen_square(x) -> ExtendedReal:
    d = digamma(x) + const("gamma")
    return d * d


def nielsen_rhs(x) -> ExtendedReal:
    from ..specfun import polygamma
    return polygamma(1, x) - const("zeta2") - xi_series(x) * 2


# ---------------------------------------------------------------------------
# series with known values, summed both with tail closure and by extrapolation


@dataclass(frozen=True)
class CatalogSeries:
    name: str
    spec: SeriesSpec
    model: str
    closed: Callable[[], ExtendedReal]


def series_catalog() -> Tuple[CatalogSeries, ...]:
    return (
        CatalogSeries("E1.4 r-sum", e1_4_spec(), "inverse-n", e1_4_closed),
        CatalogSeries("E1.5 r-sum", e1_5_spec(), "inverse-n", e1_5_closed),
        CatalogSeries("E1.8", e1_8_spec(), "inverse-n", lambda: ExtendedReal(1) - const("gamma")),
        CatalogSeries("E1.10", e1_10_spec(), "log-over-n", e1_10_closed),
        CatalogSeries("E1.17 l-sum", e1_17_spec(), "inverse-n", e1_17_closed),
        CatalogSeries("E1.36", e1_36_spec(), "inverse-n", e1_36_closed),
    )


def partial_sums(spec: SeriesSpec, ns: Sequence[int]) -> Tuple[ExtendedReal, ...]:
    """Partial sums of ``spec`` through each index in ``ns``."""
    return tuple(sum_series(replace(spec, n_max=n)) for n in ns)
