"""Nielsen's xi function and summation-by-parts representations.

The harmonic-weighted series here are summed term by term and closed with
the tail engine.  They are meant to be compared with the
direct routes in :mod:`zetaforge.specfun`.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from typing import Dict, Tuple

from .constants import constants, euler_gamma
from .errors import DomainError
from .numerics.expansions import InverseSeries, combine_models, scale_model
from .numerics.extended import ExtendedReal, wp
from .numerics.series import SeriesSpec, capped_cache, sum_series
from .quad.integrate import IntegralSpec, integrate_finite
from .specfun.gamma import digamma
from .specfun.zeta import _real

SERIES_EPS = 1e-17


class SbpKind(str, enum.Enum):
    ZETA = "zeta_sbp"
    ETA = "eta_sbp"
    HURWITZ = "hurwitz_sbp"
    DIGAMMA = "digamma_sbp"
    TRIGAMMA = "trigamma_sbp"
    POLYGAMMA = "polygamma_sbp"
    HURWITZ_DERIV = "hurwitz_deriv_sbp"

    @property
    def params(self) -> Tuple[str, ...]:
        return _ARITY[self]


_ARITY = {
    SbpKind.ZETA: ("s",),
    SbpKind.ETA: ("s",),
    SbpKind.HURWITZ: ("s", "a"),
    SbpKind.DIGAMMA: ("x",),
    SbpKind.TRIGAMMA: ("x",),
    SbpKind.POLYGAMMA: ("j", "x"),
    SbpKind.HURWITZ_DERIV: ("s", "a"),
}


def _pw(y, p):
    return wp.power(y, -p)


def _harmonic_model(series: InverseSeries, log_power: int = 0, shift=0, alternating=False):
    return series.tail_model("harmonic", log_power, shift=shift, alternating=alternating)


def _zeta_sbp(s):
    d = InverseSeries.monomial(s) - InverseSeries.shifted_power(s, 1)
    spec = SeriesSpec(lambda r, h: h * (_pw(r, s) - _pw(r + 1, s)), 1,
                      _harmonic_model(d), weight="harmonic")
    return sum_series(spec, SERIES_EPS)


def _eta_sbp(s):
    # H_r[(-1)^(r+1) r^-s - (-1)^r (r+1)^-s] = (-1)^r * (-H_r)(r^-s + (r+1)^-s)
    mag = (InverseSeries.monomial(s) + InverseSeries.shifted_power(s, 1)).scale(-1)

    def term(r, h):
        v = h * (_pw(r, s) + _pw(r + 1, s))
        return v if r % 2 else -v

    spec = SeriesSpec(term, 1, _harmonic_model(mag, alternating=True), kind="alternating",
                      weight="harmonic")
    return sum_series(spec, SERIES_EPS)


def _shifted_weight_sum(diff: InverseSeries, a, term_core, log_diff: InverseSeries = None):
    """sum_{r>=0} [psi(a+r+1) - psi(a)] * core(r + a), core expanded in y = r + a.

    ``diff`` expands core(y) (times ln y when ``log_diff`` is also given, in
    which case ``diff`` carries the ln y factor and ``log_diff`` the rest).
    """
    c = digamma(a) + euler_gamma()
    parts = []
    if log_diff is None:
        parts.append(_harmonic_model(diff, shift=a))
        parts.append(scale_model(diff.tail_model("power", shift=a), -c))
    else:
        parts.append(_harmonic_model(diff, log_power=1, shift=a))
        parts.append(_harmonic_model(log_diff, shift=a))
        parts.append(scale_model(diff.tail_model("power", log_power=1, shift=a), -c))
        parts.append(scale_model(log_diff.tail_model("power", shift=a), -c))
    model = combine_models(*parts)
    cv = c.value

    def term(r, w):
        return (w - cv) * term_core(r + a)

    spec = SeriesSpec(term, 0, model, weight="harmonic", weight_shift=a, weight_init=c.value)
    out = sum_series(spec, SERIES_EPS)
    # the weight offset carries the error of digamma(a)
    return out


def _hurwitz_sbp(s, a):
    d = InverseSeries.monomial(s) - InverseSeries.shifted_power(s, 1)
    return _shifted_weight_sum(d, a, lambda y: _pw(y, s) - _pw(y + 1, s))


def _hurwitz_deriv_sbp(s, a):
    # ln(y+1)(y+1)^-s - ln(y) y^-s = ln y [(y+1)^-s - y^-s] + ln(1+1/y)(y+1)^-s
    with_log = InverseSeries.shifted_power(s, 1) - InverseSeries.monomial(s)
    rest = InverseSeries.log1p(1) * InverseSeries.shifted_power(s, 1)

    def core(y):
        return wp.log(y + 1) * _pw(y + 1, s) - wp.log(y) * _pw(y, s)

    return _shifted_weight_sum(with_log, a, core, log_diff=rest)


def _first_difference(x, p):
    return InverseSeries.shifted_power(p, x) - InverseSeries.shifted_power(p, x + 1)


def _digamma_sbp(x):
    d = _first_difference(x, 1)
    spec = SeriesSpec(lambda k, h: h * (1 / (x + k) - 1 / (x + k + 1)), 1,
                      _harmonic_model(d), weight="harmonic")
    S = sum_series(spec, SERIES_EPS)
    return S * ExtendedReal(x) - ExtendedReal.rounded(1 / x) - constants()["gamma"]


def _polygamma_bracket(j, x):
    """x^-(j+1) + sum H_k[(x+k)^-j - (x+k+1)^-j] + x sum H_k[(x+k+1)^-(j+1) - (x+k)^-(j+1)]."""
    d = _first_difference(x, j) - _first_difference(x, j + 1).scale(x)

    def term(k, h):
        return h * (_pw(x + k, j) - _pw(x + k + 1, j) + x * (_pw(x + k + 1, j + 1) - _pw(x + k, j + 1)))

    spec = SeriesSpec(term, 1, _harmonic_model(d), weight="harmonic")
    return sum_series(spec, SERIES_EPS) + ExtendedReal.rounded(_pw(x, j + 1))


def _trigamma_sbp(x):
    return _polygamma_bracket(1, x)


def _polygamma_sbp(j, x):
    sign = 1 if (j + 1) % 2 == 0 else -1
    return _polygamma_bracket(j, x) * (sign * math.factorial(j))


def _check(kind: SbpKind, p: Dict[str, object]):
    if "s" in p and p["s"] <= 0:
        raise DomainError(f"{kind.value} needs s > 0")
    if "a" in p and p["a"] <= 0:
        raise DomainError(f"{kind.value} needs a > 0")
    if "x" in p and p["x"] <= 0:
        raise DomainError(f"{kind.value} needs x > 0")
    if kind == SbpKind.POLYGAMMA:
        j = p["j"]
        if j != int(j) or j < 2:
            raise DomainError("polygamma_sbp needs an integer j >= 2")


def sbp_eval(kind, *params) -> ExtendedReal:
    """Evaluate a summation-by-parts representation.

    ``kind`` is an :class:`SbpKind` (or its tag) and ``params`` follow its
    arity: ``(s)``, ``(s)``, ``(s, a)``, ``(x)``, ``(x)``, ``(j, x)`` or
    ``(s, a)``.
    """
    kind = SbpKind(kind)
    names = kind.params
    if len(params) != len(names):
        raise DomainError(f"{kind.value} takes {len(names)} parameter(s) {names}")
    vals = {n: _real(v, n) for n, v in zip(names, params)}
    _check(kind, vals)
    if "j" in vals:
        vals["j"] = int(vals["j"])
    return _sbp_cached(kind, tuple(vals[n] for n in names))


@capped_cache(maxsize=512)
def _sbp_cached(kind: SbpKind, args):
    fn = {
        SbpKind.ZETA: _zeta_sbp,
        SbpKind.ETA: _eta_sbp,
        SbpKind.HURWITZ: _hurwitz_sbp,
        SbpKind.DIGAMMA: _digamma_sbp,
        SbpKind.TRIGAMMA: _trigamma_sbp,
        SbpKind.POLYGAMMA: _polygamma_sbp,
        SbpKind.HURWITZ_DERIV: _hurwitz_deriv_sbp,
    }[kind]
    return fn(*args)


# ---------------------------------------------------------------------------
# Nielsen's xi


@capped_cache(maxsize=512)
def _xi_series(x):
    if x == 1:
        return ExtendedReal(0)
    d = InverseSeries.shifted_power(1, x) - InverseSeries.shifted_power(1, 1)
    spec = SeriesSpec(lambda n, h: h * (1 - x) / ((x + n) * (n + 1)), 1,
                      _harmonic_model(d), weight="harmonic")
    return sum_series(spec, SERIES_EPS)


def xi_series(x) -> ExtendedReal:
    """xi(x) = sum_{n>=1} H_n (1/(x+n) - 1/(n+1)), x not a negative integer.

    >>> abs(float(xi_series(0)) - 1.6449340668482264) < 1e-14
    True
    """
    x = _real(x, "x")
    if x < 0 and x == int(x):
        raise DomainError("xi has poles at the negative integers")
    return _xi_series(x)


@capped_cache(maxsize=512)
def _xi_integral(x, eps):
    xm1 = x - 1

    def f(u):
        return wp.expm1(xm1 * wp.log(u)) * wp.log1p(-u) / (u - 1)

    return integrate_finite(IntegralSpec(f, ("finite", 0, 1), {"log_at_0", "log_at_1"}), eps)


def xi_integral(x, eps: float = 1e-14) -> ExtendedReal:
    """xi(x) = integral_0^1 (u^(x-1) - 1) ln(1-u) / (u-1) du for x > 0."""
    x = _real(x, "x")
    if x <= 0:
        raise DomainError("the integral form of xi needs x > 0")
    return _xi_integral(x, float(eps))


@dataclass(frozen=True)
class XiMean:
    closed: ExtendedReal
    series: ExtendedReal
    integral: ExtendedReal

    @property
    def routes(self) -> Dict[str, ExtendedReal]:
        return {"closed": self.closed, "series": self.series, "integral": self.integral}

    @property
    def residuals(self) -> Dict[Tuple[str, str], float]:
        r = self.routes
        return {(p, q): float(abs(r[p].value - r[q].value))
                for p, q in itertools.combinations(r, 2)}


def xi_mean_closed() -> ExtendedReal:
    c = constants()
    g = c["gamma"]
    return (c["zeta2"] - g * g - c["gamma1"] * 2) * ExtendedReal(wp.mpf(1) / 2)


@capped_cache(maxsize=1)
def xi_mean_series() -> ExtendedReal:
    """sum_{n>=1} H_n [ln((n+1)/n) - 1/(n+1)]."""
    d = InverseSeries.log1p(1) - InverseSeries.shifted_power(1, 1)
    spec = SeriesSpec(lambda n, h: h * (wp.log1p(wp.mpf(1) / n) - wp.mpf(1) / (n + 1)), 1,
                      _harmonic_model(d), weight="harmonic")
    return sum_series(spec, SERIES_EPS)


@capped_cache(maxsize=1)
def xi_mean_integral() -> ExtendedReal:
    """integral_0^1 [1/(u ln u) - 1/(u-1)] ln(1-u) du."""
    def f(u):
        return (1 / (u * wp.log(u)) - 1 / (u - 1)) * wp.log1p(-u)

    return integrate_finite(IntegralSpec(f, ("finite", 0, 1), {"log_at_0", "log_at_1"}), 1e-14)


def xi_mean() -> XiMean:
    """The integral of xi over [0, 1] by three independent routes."""
    return XiMean(xi_mean_closed(), xi_mean_series(), xi_mean_integral())


# ---------------------------------------------------------------------------
# Laurent data of the Hurwitz zeta function at s = 1


@capped_cache(maxsize=256)
def _log_over_difference(a, b):
    d = b - a
    # ln(y+d)/(y+d) - ln(y)/y = ln y [(y+d)^-1 - y^-1] + ln(1+d/y) (y+d)^-1
    with_log = InverseSeries.shifted_power(1, d) - InverseSeries.monomial(1)
    rest = InverseSeries.log1p(d) * InverseSeries.shifted_power(1, d)
    model = combine_models(with_log.tail_model("power", 1, shift=a),
                           rest.tail_model("power", 0, shift=a))

    def term(n):
        y = n + a
        return wp.log(y + d) / (y + d) - wp.log(y) / y

    return sum_series(SeriesSpec(term, 0, model), SERIES_EPS)


def gamma1_difference_series(a, b) -> ExtendedReal:
    """gamma_1(b) - gamma_1(a) as sum_{n>=0} [ln(n+b)/(n+b) - ln(n+a)/(n+a)].

    This is the s -> 0 value of zeta'(s+1, a) - zeta'(s+1, b), where the
    poles of the two Hurwitz functions cancel.
    """
    a = _real(a, "a")
    b = _real(b, "b")
    if a <= 0 or b <= 0:
        raise DomainError("Hurwitz parameters must be positive")
    if a == b:
        return ExtendedReal(0)
    return _log_over_difference(a, b)


_LIMIT_NODES = tuple(wp.mpf(1) / (4 * 2 ** k) for k in range(12))


@capped_cache(maxsize=64)
def _regular_part_limit(a):
    # F(s) = [zeta'(1+s, a) + 1/s^2] + psi'(1+s) is analytic at s = 0 and
    # equals zeta'(s+1, a) + psi'(s); extrapolate it polynomially to s = 0.
    from .specfun.gamma import polygamma
    from .specfun.zeta import hurwitz_zeta_deriv

    xs, ys, errs = [], [], []
    for s in _LIMIT_NODES:
        v = hurwitz_zeta_deriv(1 + s, a) + ExtendedReal(1 / (s * s)) + polygamma(1, 1 + s)
        xs.append(s)
        ys.append(v.value)
        errs.append(v.err)
    # Neville's scheme at 0
    table = list(ys)
    prev_best = None
    n = len(xs)
    for k in range(1, n):
        for i in range(n - k):
            table[i] = (xs[i + k] * table[i] - xs[i] * table[i + 1]) / (xs[i + k] - xs[i])
        if k == n - 2:
            prev_best = table[0]
    best = table[0]
    # node errors are amplified by the Lebesgue constant of the scheme
    amp = 2.0 ** (n + 1)
    return ExtendedReal(best, float(abs(best - prev_best)) + amp * max(errs))


def hurwitz_deriv_regular_limit(a) -> ExtendedReal:
    """lim_{s->0} [zeta'(s+1, a) + psi'(s)], from values at moderate s."""
    a = _real(a, "a")
    if a <= 0:
        raise DomainError("a must be positive")
    return _regular_part_limit(a)
