"""The registered identities.

Records are keyed by ids such as ``E1.13``; some also answer to a short
alias such as ``P1`` or ``L2a``.
"""

from __future__ import annotations

import json
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..errors import UnknownIdentityError, UsageError
from ..nielsen import (gamma1_difference_series, hurwitz_deriv_regular_limit, sbp_eval,
                       xi_integral, xi_mean_series, xi_series)
from ..numerics.extended import ExtendedReal, to_mpf, wp
from ..specfun import (arccot_series, digamma, dirichlet_eta, eta_alternating, hurwitz_zeta,
                       hurwitz_zeta_deriv, polygamma, stieltjes_gamma1, zeta)
from . import evaluators as ev
from .records import (COST_CLASSES, SLOW_TOL, IdentityRecord, Published, Route)

c = ev.const

# terminal method tags used by the independence audit
ZETA = "zeta:euler-maclaurin"
OUTER = "outer-sum:geometric"
CONST = "constants"
HSER = "series:harmonic-weighted"
SER = "series:tail-closed"
DIGAMMA = "digamma:asymptotic"
HURWITZ = "hurwitz:euler-maclaurin"
LOGGAMMA = "log-gamma:stirling"
CSTIRLING = "log-gamma:complex-stirling"
POLYLOG = "polylog"
GAUSS = "quad:gauss-legendre"
TANH = "quad:tanh-sinh"
EXPSINH = "quad:exp-sinh"
SEGMENTS = "quad:oscillation-segments"
LOGOSC = "quad:log-oscillatory"
ARCCOT = "arccot:series"
ATAN = "elementary:atan"
LOG = "elementary:log"
STIELTJES = "stieltjes:limit-definition"
NEVILLE = "limit:neville"
SBP = "partial-summation"
NIELSEN = "nielsen:series"
BOOLE = "boole-summation"
CONDENSE = "alternating-condensation"
GAMMA0 = "incomplete-gamma"


def _r(name, fn, *terminals) -> Route:
    return Route(name, fn, frozenset(terminals))


def _values(*vals):
    return tuple((v,) for v in vals)


def _build() -> Tuple[IdentityRecord, ...]:
    R: List[IdentityRecord] = []
    add = R.append
    half = 0.5

    # -- zeta-product sums ---------------------------------------------------
    add(IdentityRecord(
        "E1.1",
        "sum_{k>=3} (1/k)[sum_{m=1}^{k-2} zeta(k-m) zeta(m+1) - k] = 3 + gamma^2 + 2 gamma_1 - pi^2/3",
        _r("zeta-product-sum", ev.e1_1_lhs, ZETA, OUTER),
        _r("closed", lambda eps: ev.e1_1_rhs(), CONST),
        tol=SLOW_TOL, cost_class="slow",
        published=Published("-0.102321900856", 1e-9)))
    add(IdentityRecord(
        "E1.2",
        "2 sum_{n>=1} psi(n)/n^k = k zeta(k+1) - 2 gamma zeta(k) - sum_{l=1}^{k-2} zeta(l+1) zeta(k-l)",
        _r("psi-power-sum", lambda eps, k: ev.e1_2_lhs(k, eps), HSER, CONST),
        _r("zeta-values", lambda eps, k: ev.e1_2_rhs(k), ZETA, CONST),
        param_names=("k",), params=_values(*range(2, 11)),
        notes="k=2 has an empty zeta-product sum."))
    add(IdentityRecord(
        "E1.4",
        "sum_{k>=3} [zeta(k)-1]/k = sum_{r>=2} [ln(r/(r-1)) - 1/(2r^2) - 1/r] = 3/2 - gamma - zeta(2)/2",
        _r("k-sum", ev.e1_4_ksum, ZETA, OUTER),
        _r("closed", lambda eps: ev.e1_4_closed(), CONST),
        extra=(_r("r-sum", ev.e1_4_rsum, SER),)))
    add(IdentityRecord(
        "E1.5",
        "sum_{k>=3} [zeta(k+1)-1] = sum_{r>=2} 1/((r-1) r^3) = 3 - zeta(2) - zeta(3)",
        _r("k-sum", ev.e1_5_ksum, ZETA, OUTER),
        _r("closed", lambda eps: ev.e1_5_closed(), CONST),
        extra=(_r("r-sum", ev.e1_5_rsum, SER),)))
    add(IdentityRecord(
        "E1.8",
        "sum_{n>=2} [ln(n/(n-1)) - 1/n] = 1 - gamma",
        _r("series", ev.e1_8_series, SER),
        _r("closed", lambda eps: ExtendedReal(1) - c("gamma"), CONST)))
    add(IdentityRecord(
        "E1.10",
        "sum_{n>=1} H_n [ln((n+1)/n) - 1/(n+1)] = zeta(2)/2 - gamma^2/2 - gamma_1",
        _r("series", ev.e1_10_series, HSER),
        _r("closed", lambda eps: ev.e1_10_closed(), CONST),
        extra=(_r("split-series", ev.e1_10_split, HSER, ZETA),)))
    add(IdentityRecord(
        "E1.12",
        "2 int_0^1 [Li_k(t) - t zeta(k)]/(t(t-1)) dt = k zeta(k+1) - sum_{l=1}^{k-2} zeta(l+1) zeta(k-l)",
        _r("integral", lambda eps, k: ev.e1_12_integral(k, eps), TANH, POLYLOG),
        _r("zeta-values", lambda eps, k: ev.e1_12_rhs(k), ZETA),
        param_names=("k",), params=_values(2, 3, 4)))
    add(IdentityRecord(
        "E1.13",
        "sum_{r>=1} 1/(2r+1) [sum_{l=1}^{2r-1} (-1)^(l+1) zeta(l+1) zeta(2r-l+1) - 2]"
        " = sum_{n>=2} ln(n/(n-1))/n + 2 - zeta(2) - 2 gamma_1 - gamma^2 - ln 2",
        _r("zeta-product-sum", ev.e1_13_lhs, ZETA, OUTER),
        _r("log-series", ev.e1_13_rhs, SER, CONST),
        tol=SLOW_TOL, cost_class="slow", aliases=("P1",),
        published=Published("0.262903", 5e-6)))
    add(IdentityRecord(
        "E1.14",
        "sum_{l=1}^{k-2} (-1)^(l+1) zeta(l+1) zeta(k-l) = 2 sum_{n>=1} psi(n)/n^k + 2 zeta(k+1) + 2 gamma zeta(k), k odd",
        _r("zeta-products", lambda eps, k: ev.e1_14_lhs(k), ZETA),
        _r("psi-power-sum", lambda eps, k: ev.e1_14_rhs(k, eps), HSER, ZETA, CONST),
        param_names=("k",), params=_values(3, 5, 7)))
    add(IdentityRecord(
        "E1.17",
        "sum_{r>=1} [zeta(2r+1)-1]/(2r+1) = sum_{l>=2} [ln((l+1)/(l-1))/2 - 1/l] = 1 - gamma - ln(2)/2",
        _r("r-sum", lambda eps: ev.odd_zeta_tsum(1, eps), ZETA, OUTER),
        _r("closed", lambda eps: ev.e1_17_closed(), CONST),
        extra=(_r("l-sum", ev.e1_17_lsum, SER),)))
    add(IdentityRecord(
        "E1.18",
        "sum_{r>=1} [zeta(2r+2)-1]/(2r+1) = sum_{l>=2} (1/l)[arccoth(l) - 1/l]"
        " = (1/2) sum_{l>=2} ln((l+1)/(l-1))/l - zeta(2) + 1",
        _r("r-sum", ev.even_zeta_over_odd, ZETA, OUTER),
        _r("log-series", ev.e1_18_logs, SER, CONST),
        extra=(_r("arccoth-series", ev.e1_18_coth, SER),)))
    add(IdentityRecord(
        "E1.20",
        "sum_{n>=2} H_{n-1}[ln((n+1)/(n-1))/2 - 1/n]"
        " = zeta(2)/2 - gamma_1 - gamma^2/2 - (1/2) sum_{n>=2} ln((n+1)/n)/n - ln(2)/2",
        _r("harmonic-series", ev.e1_20_lhs, HSER),
        _r("log-series", ev.e1_20_rhs, SER, CONST)))
    add(IdentityRecord(
        "E1.24",
        "sum_{r>=1} [zeta(2r+1)-1] t^(2r+1)/(2r+1) = [ln Gamma(2-t) - ln Gamma(2+t)]/2 + (1-gamma) t, |t|<2",
        _r("r-sum", lambda eps, t: ev.odd_zeta_tsum(t, eps), ZETA, OUTER),
        _r("log-gamma", lambda eps, t: ev.e1_24_rhs(t), LOGGAMMA, CONST),
        param_names=("t",), params=_values(half, 1, 1.5),
        notes="The power of t is indexed by the summation variable r."))
    add(IdentityRecord(
        "E1.25",
        "2 sum_{k>=0} [zeta(2k+2)-1]/(2k+1) = sum_{l>=2} ln((l+1)/(l-1))/l"
        " = int_0^1 [psi(2+t) - psi(2-t)]/t dt",
        _r("k-sum", lambda eps: ev.even_zeta_over_odd(eps) * 2 + (c("zeta2") - 1) * 2, ZETA, OUTER, CONST),
        _r("integral", ev.e1_25_integral, GAUSS, DIGAMMA),
        extra=(_r("l-sum", ev.log_ratio_sym_over_l, SER),)))
    add(IdentityRecord(
        "E1.26",
        "sum_{n>=2} ln((n+1)/n)/n = sum_{k>=1} (-1)^(k+1)[zeta(k+1)-1]/k"
        " = int_0^inf [gamma + Gamma(0,t) + ln t]/(e^t - 1) dt - ln 2"
        " = int_0^1 (t-1)/ln(t) [-1 - ln(1-t)/t] dt",
        _r("series", ev.log_ratio_over_n, SER),
        _r("k-sum", ev.alternating_zeta_over_k, ZETA, OUTER),
        extra=(_r("half-line-integral", ev.e1_26_exp_integral, EXPSINH, GAMMA0, CONST),
               _r("unit-integral", ev.e1_26_unit_integral, TANH))))
    add(IdentityRecord(
        "E1.27",
        "int_0^1 t^(n-1)(t-1)/ln(t) dt = ln((n+1)/n)",
        _r("integral", lambda eps, n: ev.e1_27_integral(n, eps), TANH),
        _r("log", lambda eps, n: ev.e1_27_log(n), LOG),
        param_names=("n",), params=_values(1, 2, 5, 20), tol=1e-12))
    add(IdentityRecord(
        "E1.29",
        "sum_{k>=3} (-1)^k/k [sum_{m=1}^{k-2} zeta(k-m) zeta(m+1) - k]"
        " = 2 zeta(2) - 1/2 - 2 gamma_1 - gamma^2 - 2 sum_{n>=1} ln((n+1)/n)/n",
        _r("zeta-product-sum", ev.e1_29_lhs, ZETA, OUTER),
        _r("log-series", ev.e1_29_rhs, SER, CONST),
        tol=SLOW_TOL, cost_class="slow", aliases=("P2",),
        published=Published("0.0868281269673", 1e-10)))
    add(IdentityRecord(
        "E1.31",
        "sum_{k>=3} (-1)^k [zeta(k+1)-1] = zeta(2) - 1/2 - zeta(3)",
        _r("k-sum", ev.e1_31_ksum, ZETA, OUTER),
        _r("closed", lambda eps: ev.e1_31_closed(), CONST)))
    add(IdentityRecord(
        "E1.32",
        "sum_{k>=1} t^k [zeta(k+1)-1] = t/(t-1) - gamma - psi(1-t)",
        _r("k-sum", lambda eps, t: ev.e1_32_ksum(t, eps), ZETA, OUTER),
        _r("digamma", lambda eps, t: ev.e1_32_rhs(t), DIGAMMA, CONST),
        param_names=("t",), params=_values(-1, half, -half)))
    add(IdentityRecord(
        "E1.33",
        "sum_{k>=3} (-1)^k [zeta(k)-1]/k = ln 2 - 1/2 + gamma - zeta(2)/2",
        _r("k-sum", ev.e1_33_ksum, ZETA, OUTER),
        _r("closed", lambda eps: ev.e1_33_closed(), CONST)))
    add(IdentityRecord(
        "E1.34",
        "sum_{k>=2} t^k [zeta(k)-1]/k = t(1-gamma) + ln(1-t) + ln Gamma(1-t)",
        _r("k-sum", lambda eps, t: ev.e1_34_ksum(t, eps), ZETA, OUTER),
        _r("log-gamma", lambda eps, t: ev.e1_34_rhs(t), LOGGAMMA, CONST),
        param_names=("t",), params=_values(-1, half),
        notes="Checked with the factor t^k in the summand; at t=-1 this is the "
              "alternating sum starting at k=2."))
    add(IdentityRecord(
        "E1.36",
        "sum_{k>=3} (-1)^k/k sum_{n>=2} n^-k = sum_{n>=2} [ln(n/(n+1)) + 1/n - 1/(2n^2)]"
        " = -1/2 + gamma - zeta(2)/2 + ln 2",
        _r("n-sum", ev.e1_36_series, SER),
        _r("closed", lambda eps: ev.e1_36_closed(), CONST),
        extra=(_r("k-sum", ev.e1_33_ksum, ZETA, OUTER),)))
    add(IdentityRecord(
        "E1.37",
        "sum_{n>=2} H_{n-1}[ln(n/(n+1)) + 1/n - 1/(2n^2)]"
        " = -zeta(2)/2 + gamma_1 + gamma^2/2 - zeta(3)/2 + sum_{n>=1} ln((n+1)/n)/n",
        _r("harmonic-series", ev.e1_37_lhs, HSER),
        _r("log-series", ev.e1_37_rhs, SER, CONST),
        extra=(_r("split", ev.e1_37_middle, SER, CONST),)))
    add(IdentityRecord(
        "E1.38",
        "sum_{r>=1} (-1)^r/(2r+1) [sum_{l=1}^{2r-1} (-1)^(l+1) zeta(l+1) zeta(2r-l+1) - 2]"
        " = 2 sum_{l>=2} arccot(l)/l - 2 zeta(2) + 2 + 2 sum_{n>=2} H_{n-1}(arccot(n) - 1/n)",
        _r("zeta-product-sum", ev.e1_38_lhs, ZETA, OUTER),
        _r("arccot-series", ev.e1_38_rhs, SER, HSER, ATAN, CONST),
        tol=SLOW_TOL, cost_class="slow", aliases=("P3",),
        published=Published("-0.215191890953", 1e-9)))
    add(IdentityRecord(
        "E1.40",
        "arccot(x) = sum_{k>=0} (-1)^k / ((2k+1) x^(2k+1)), x^2 >= 1",
        _r("power-series", lambda eps, x: arccot_series(x), ARCCOT),
        _r("atan", lambda eps, x: ExtendedReal.rounded(wp.atan(1 / to_mpf(x))), ATAN),
        param_names=("x",), params=_values(2, 3, 1),
        notes="x=1 is summed with alternating condensation."))
    add(IdentityRecord(
        "E1.41",
        "sum_{r>=1} (-1)^r [zeta(2r+1)-1]/(2r+1) = 1 - gamma - pi/4 + (i/2) ln(Gamma(1+i)/Gamma(1-i))",
        _r("r-sum", ev.e1_41_rsum, ZETA, OUTER),
        _r("complex-log-gamma", lambda eps: ev.e1_41_rhs(), CSTIRLING, CONST)))
    add(IdentityRecord(
        "E1.42",
        "sum_{r>=1} (-1)^r [zeta(2r+2)-1]/(2r+1) = sum_{l>=2} (1/l)[arccot(l) - 1/l]"
        " = sum_{l>=2} arccot(l)/l - zeta(2) + 1",
        _r("r-sum", ev.e1_42_rsum, ZETA, OUTER),
        _r("arccot-series", ev.e1_42_closed, SER, ATAN, CONST),
        extra=(_r("l-sum", ev.e1_42_lsum, SER, ATAN),)))
    add(IdentityRecord(
        "E1.45",
        "sum_{l>=2} z^l arccot(l)/l = -int_0^1 sin(ln t)/(t ln t) ln(1 - z t) dt - pi z/4, |z| <= 1",
        _r("series", lambda eps, z: ev.weighted_arccot_sum(z, eps), SER, ATAN),
        _r("integral", lambda eps, z: ev.arccot_weight_integral(z, eps * 10), LOGOSC, CONST),
        param_names=("z",), params=_values(1, half, -1), aliases=("L1",)))
    add(IdentityRecord(
        "E1.46",
        "-int_0^1 sin(ln t)/(t ln t) ln(1-t) dt = sum_{l>=1} H_l [arccot(l) - arccot(l+1)]",
        _r("integral", lambda eps: ev.harmonic_arccot_integral(eps * 10), LOGOSC),
        _r("harmonic-series", ev.harmonic_arccot_series, HSER, ATAN),
        extra=(_r("arccot-sum", lambda eps: ev.arccot_over_l(eps) + c("pi") / 4, SER, ATAN, CONST),),
        aliases=("C1",)))
    add(IdentityRecord(
        "E1.47",
        "sum_{k>=1} a^k ln((x+k)/(y+k))/k = -int_0^1 (t^x - t^y)/(t ln t) ln(1 - a t) dt, |a| <= 1",
        _r("series", lambda eps, a, x, y: ev.log_ratio_power_sum(a, x, y, eps), SER),
        _r("integral", lambda eps, a, x, y: ev.log_ratio_power_integral(a, x, y, eps), TANH),
        param_names=("a", "x", "y"), params=((half, 1, 2), (1, half, 1.5), (-1, 1, 3))))
    add(IdentityRecord(
        "E1.49",
        "int_0^inf sin(u)/u e^(-k u) du = int_0^1 sin(ln t)/ln(t) t^(k-1) dt = arccot(k)",
        _r("half-line-integral", lambda eps, k: ev.sine_laplace(k, eps), SEGMENTS, GAUSS),
        _r("arccot", lambda eps, k: arccot_series(k) if k else c("pi") / 2, ARCCOT, CONST),
        extra=(_r("log-integral", lambda eps, k: ev.sine_log_moment(k, eps), LOGOSC),),
        param_names=("k",), params=_values(0, 1, 2), tol=1e-12))

    # -- partial summation ---------------------------------------------------
    add(IdentityRecord(
        "E2.1",
        "zeta(s+1) = sum_{r>=1} H_r (r^-s - (r+1)^-s)",
        _r("partial-summation", lambda eps, s: sbp_eval("zeta_sbp", s), SBP, HSER),
        _r("zeta", lambda eps, s: zeta(s + 1), ZETA),
        param_names=("s",), params=_values(half, 1, 2, 3.5, 6), tol=1e-10, aliases=("L2a",)))
    add(IdentityRecord(
        "E2.2",
        "(1 - 2^-s) zeta(s+1) = sum_{r>=1} H_r [(-1)^(r+1) r^-s - (-1)^r (r+1)^-s]",
        _r("partial-summation", lambda eps, s: sbp_eval("eta_sbp", s), SBP, HSER, BOOLE),
        _r("zeta", lambda eps, s: zeta(s + 1) * ExtendedReal.rounded(1 - wp.power(2, -to_mpf(s))), ZETA),
        param_names=("s",), params=_values(0.25, half, 1, 2, 4), tol=1e-10, aliases=("L2b",),
        notes="The summand is read with a single index r."))
    add(IdentityRecord(
        "E2.3",
        "zeta(s+1, a) = sum_{r>=0} [psi(a+r+1) - psi(a)][(r+a)^-s - (r+a+1)^-s]",
        _r("partial-summation", lambda eps, s, a: sbp_eval("hurwitz_sbp", s, a), SBP, HSER, DIGAMMA),
        _r("hurwitz", lambda eps, s, a: hurwitz_zeta(s + 1, a), HURWITZ),
        param_names=("s", "a"), params=((1, 1), (half, half), (2, 3), (1.5, 0.25), (3, 1.75)),
        tol=1e-10, aliases=("L2c",)))
    add(IdentityRecord(
        "E2.4",
        "psi(x) = -gamma - 1/x + x sum_{k>=1} H_k [1/(x+k) - 1/(x+k+1)]",
        _r("partial-summation", lambda eps, x: sbp_eval("digamma_sbp", x), SBP, HSER, CONST),
        _r("digamma", lambda eps, x: digamma(x), DIGAMMA),
        param_names=("x",), params=_values(0.125, half, 1, 2.5, 7), tol=1e-10, aliases=("L2d",)))
    add(IdentityRecord(
        "E2.5",
        "psi'(x) = 1/x^2 + sum_{k>=1} H_k [1/(x+k) - 1/(x+k+1)] + x sum_{k>=1} H_k [(x+k+1)^-2 - (x+k)^-2]",
        _r("partial-summation", lambda eps, x: sbp_eval("trigamma_sbp", x), SBP, HSER),
        _r("trigamma", lambda eps, x: polygamma(1, x), HURWITZ),
        param_names=("x",), params=_values(0.25, half, 1, 2.5, 4), tol=1e-10, aliases=("L2e",)))
    add(IdentityRecord(
        "E2.6",
        "psi^(j)(x) = (-1)^(j+1) j! {x^-(j+1) + sum_{k>=1} H_k [(x+k)^-j - (x+k+1)^-j]"
        " + x sum_{k>=1} H_k [(x+k+1)^-(j+1) - (x+k)^-(j+1)]}",
        _r("partial-summation", lambda eps, j, x: sbp_eval("polygamma_sbp", j, x), SBP, HSER),
        _r("polygamma", lambda eps, j, x: polygamma(j, x), HURWITZ),
        param_names=("j", "x"), params=((2, 0.7), (3, 1), (4, 2.5), (2, 5), (5, half)),
        tol=1e-10, aliases=("L2f",)))
    add(IdentityRecord(
        "E2.8",
        "sum_{r>=1} (-1)^(r+1) r^-s = (1 - 2^(1-s)) zeta(s), s > 0",
        _r("boole", lambda eps, s: eta_alternating(s), BOOLE),
        _r("eta", lambda eps, s: dirichlet_eta(s), ZETA, CONDENSE),
        param_names=("s",), params=_values(half, 1, 1.5, 2, 3),
        notes="For s <= 1 the right side is evaluated by condensing the alternating partial sums."))
    add(IdentityRecord(
        "E2.10",
        "lim_{s->0} [zeta'(s+1, a) - zeta'(s+1, b)] = gamma_1(b) - gamma_1(a);"
        " gamma_1 - gamma_1(1/2) = ln^2 2 + 2 gamma ln 2",
        _r("log-series", lambda eps, a, b: gamma1_difference_series(a, b), SER),
        _r("stieltjes", lambda eps, a, b: stieltjes_gamma1(b) - stieltjes_gamma1(a), STIELTJES),
        extra=(_r("closed", _gamma1_half_closed, CONST),),
        param_names=("a", "b"), params=((1, half), (2, half), (1, 3), (0.25, 0.75)), tol=1e-12,
        notes="The closed form applies at (a, b) = (1, 1/2) only."))
    add(IdentityRecord(
        "E2.11",
        "lim_{s->0} [zeta'(s+1, a) + psi'(s)] = zeta(2) - gamma_1(a)",
        _r("limit", lambda eps, a: hurwitz_deriv_regular_limit(a), NEVILLE, HURWITZ),
        _r("stieltjes", lambda eps, a: c("zeta2") - stieltjes_gamma1(a), STIELTJES, CONST),
        param_names=("a",), params=_values(1, half),
        notes="The limit is extrapolated from s in [1/8192, 1/4]."))
    add(IdentityRecord(
        "E2.12",
        "zeta'(s+1, a) = sum_{r>=0} [psi(a+r+1) - psi(a)][ln(r+a+1)(r+a+1)^-s - ln(r+a)(r+a)^-s]",
        _r("partial-summation", lambda eps, s, a: sbp_eval("hurwitz_deriv_sbp", s, a), SBP, HSER, DIGAMMA),
        _r("hurwitz-derivative", lambda eps, s, a: hurwitz_zeta_deriv(s + 1, a), HURWITZ),
        param_names=("s", "a"), params=((1, 1), (half, half), (2, 3), (1.5, 0.25), (3, 2)),
        tol=1e-10, aliases=("L2.12",)))

    # -- Nielsen's xi ----------------------------------------------------------
    add(IdentityRecord(
        "E3.1",
        "[psi(x) + gamma]^2 = psi'(x) - zeta(2) - 2 xi(x)",
        _r("digamma-square", lambda eps, x: ev.nielsen_square(x), DIGAMMA, CONST),
        _r("xi", lambda eps, x: ev.nielsen_rhs(x), NIELSEN, HURWITZ, CONST),
        param_names=("x",), params=_values(0.25, half, 1, 2, 5), tol=1e-11))
    add(IdentityRecord(
        "E3.3",
        "int_0^1 xi(x) dx = sum_{n>=1} H_n [ln((n+1)/n) - 1/(n+1)]"
        " = sum_{n>=1} H_n [ln((n+1)/n) - 1/n] + zeta(2) = [zeta(2) - gamma^2 - 2 gamma_1]/2",
        _r("quadrature", ev.xi_mean_quadrature, GAUSS, NIELSEN),
        _r("closed", lambda eps: ev.xi_mean_closed(), CONST),
        extra=(_r("series", lambda eps: xi_mean_series(), HSER),
               _r("split-series", ev.e1_10_split, HSER, ZETA)),
        cost_class="slow"))
    add(IdentityRecord(
        "E3.4",
        "xi(x) = int_0^inf [e^((1-x)t) - 1] ln(1 - e^-t)/(1 - e^t) dt"
        " = int_0^1 (u^(x-1) - 1) ln(1-u)/(u-1) du",
        _r("series", lambda eps, x: xi_series(x), NIELSEN),
        _r("unit-integral", lambda eps, x: xi_integral(x, eps), TANH),
        extra=(_r("half-line-integral", lambda eps, x: ev.xi_t_integral(x, eps), EXPSINH),),
        param_names=("x",), params=_values(half, 1, 1.5, 2, 5), tol=1e-11))
    add(IdentityRecord(
        "E3.5",
        "int_0^1 xi(x) dx = -int_0^inf [1/t + 1/(1 - e^t)] ln(1 - e^-t) dt"
        " = int_0^1 [1/(u ln u) - 1/(u-1)] ln(1-u) du",
        _r("closed", lambda eps: ev.xi_mean_closed(), CONST),
        _r("half-line-integral", ev.xi_mean_t_integral, EXPSINH),
        extra=(_r("unit-integral", ev.xi_mean_u_integral, TANH),)))
    add(IdentityRecord(
        "E3.7",
        "xi(0) = -int_0^inf ln(1 - e^-t) dt = -int_0^1 ln(1-u)/u du = zeta(2)",
        _r("xi-series", lambda eps: xi_series(0), NIELSEN),
        _r("zeta", lambda eps: zeta(2), ZETA),
        extra=(_r("half-line-integral", ev.xi_zero_t_integral, EXPSINH),
               _r("unit-integral", ev.xi_zero_u_integral, TANH))))
    return tuple(sorted(R, key=lambda r: _sort_key(r.id)))


def _gamma1_half_closed(eps, a, b) -> Optional[ExtendedReal]:
    if to_mpf(a) != 1 or to_mpf(b) != wp.mpf(1) / 2:
        return None
    l2 = c("ln2")
    # gamma_1(1/2) - gamma_1(1) = -(ln^2 2 + 2 gamma ln 2)
    return -(l2 * l2 + c("gamma") * l2 * 2)


def _sort_key(ident: str):
    head, _, rest = ident.partition(".")
    return (head[0], int(head[1:]) if head[1:].isdigit() else 0, int(rest) if rest.isdigit() else 0)


@lru_cache(maxsize=1)
def registry() -> Tuple[IdentityRecord, ...]:
    """All records in stable order."""
    recs = _build()
    seen = set()
    for r in recs:
        for n in r.names:
            if n in seen:
                raise UsageError(f"identity name {n!r} registered twice")
            seen.add(n)
    return recs


def _index() -> Dict[str, IdentityRecord]:
    return {n: r for r in registry() for n in r.names}


def get_identity(ident: str) -> IdentityRecord:
    try:
        return _index()[ident]
    except KeyError:
        raise UnknownIdentityError(
            f"unknown identity {ident!r}; valid ids: {', '.join(valid_ids())}") from None


def valid_ids() -> List[str]:
    return [n for r in registry() for n in r.names]


def select(tokens: Optional[Iterable[str]] = None) -> List[IdentityRecord]:
    """Records matching any token, by exact id/alias first and prefix otherwise."""
    if tokens is None:
        return list(registry())
    tokens = [t.strip() for t in tokens if t and t.strip()]
    if not tokens:
        return list(registry())
    index = _index()
    chosen = set()
    for t in tokens:
        if t in index:
            chosen.add(index[t].id)
            continue
        hits = [r.id for r in registry() if any(n.startswith(t) for n in r.names)]
        if not hits:
            raise UnknownIdentityError(
                f"no identity matches {t!r}; valid ids: {', '.join(valid_ids())}")
        chosen.update(hits)
    return [r for r in registry() if r.id in chosen]


def list_identities(filter: Optional[str] = None, cost_class: Optional[str] = None
                    ) -> List[IdentityRecord]:
    """Registered records, optionally restricted by id/alias prefix or cost class.

    ``filter`` may itself be a cost class name.
    """
    if filter in COST_CLASSES and cost_class is None:
        filter, cost_class = None, filter
    if cost_class is not None and cost_class not in COST_CLASSES:
        raise UsageError(f"unknown cost class {cost_class!r}; use one of {COST_CLASSES}")
    recs = select([filter] if filter else None)
    if cost_class is not None:
        recs = [r for r in recs if r.cost_class == cost_class]
    return recs


def catalog_json(records: Optional[Sequence[IdentityRecord]] = None) -> str:
    recs = registry() if records is None else records
    return json.dumps({"schema": 1, "identities": [r.catalog_entry() for r in recs]},
                      indent=2, sort_keys=True)
