"""Adaptive integration on finite and semi-infinite ranges.

Smooth integrands use adaptive bisection with a Gauss-Legendre 16/32 pair.
Logarithmic endpoint singularities use the tanh-sinh transform; half-lines
use the exp-sinh transform.  Oscillatory integrands are split at their
zeros and the segment sums condensed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, FrozenSet, Optional, Tuple

from ..errors import ConfigurationError, ConvergenceError, IntegrabilityError
from ..numerics.extended import ExtendedReal, to_mpf, ulp_err, wp
from ..numerics.extrapolation import extrapolate
from .rules import exp_sinh_node, gauss_legendre, tanh_sinh_node

FLAGS = frozenset({"log_at_0", "log_at_1", "removable_at_0", "oscillatory_log"})
DEFAULT_EPS = 1e-12

_TAU_MAX = wp.mpf(9) / 2
_MAX_LEVEL = 9
_MAX_INTERVALS = 4000


@dataclass(frozen=True)
class IntegralSpec:
    """An integrand together with its domain and endpoint behaviour.

    ``domain`` is ``("finite", a, b)`` or ``("semi_infinite", a)``.  For an
    oscillatory integrand on a half-line, ``period`` gives the spacing of its
    sign changes starting at ``a``.
    """

    integrand: Callable
    domain: Tuple
    flags: FrozenSet[str] = field(default_factory=frozenset)
    period: Optional[object] = None

    def __post_init__(self):
        flags = frozenset(self.flags)
        unknown = flags - FLAGS
        if unknown:
            raise ConfigurationError(f"unknown singularity flags {sorted(unknown)}")
        object.__setattr__(self, "flags", flags)
        kind = self.domain[0]
        if kind == "finite":
            if len(self.domain) != 3:
                raise ConfigurationError("finite domain is ('finite', a, b)")
            a, b = to_mpf(self.domain[1]), to_mpf(self.domain[2])
            if not a < b:
                raise ConfigurationError("finite domain needs a < b")
            object.__setattr__(self, "domain", ("finite", a, b))
        elif kind == "semi_infinite":
            if len(self.domain) != 2:
                raise ConfigurationError("semi-infinite domain is ('semi_infinite', a)")
            object.__setattr__(self, "domain", ("semi_infinite", to_mpf(self.domain[1])))
        else:
            raise ConfigurationError(f"unknown domain kind {kind!r}")


class _Evaluator:
    """Calls the integrand and tracks the error it reports."""

    def __init__(self, f):
        self.f = f
        self.err = 0.0

    def __call__(self, t, weight=1):
        v = self.f(t)
        if isinstance(v, ExtendedReal):
            self.err += float(abs(weight)) * v.err
            v = v.value
        else:
            v = to_mpf(v)
        if not wp.isfinite(v):
            raise IntegrabilityError(f"integrand is not finite at t={wp.nstr(t, 8)}")
        return v


def _gl(f, lo, hi, n):
    xs, ws = gauss_legendre(n)
    half = (hi - lo) / 2
    mid = (hi + lo) / 2
    acc = wp.mpf(0)
    for x, w in zip(xs, ws):
        acc += w * f(mid + half * x, w * half)
    return acc * half


def _gauss_adaptive(f, a, b, eps) -> ExtendedReal:
    total = wp.mpf(0)
    err = 0.0
    stack = [(a, b, 0)]
    width = b - a
    count = 0
    while stack:
        lo, hi, depth = stack.pop()
        count += 1
        if count > _MAX_INTERVALS:
            raise IntegrabilityError("adaptive refinement did not converge")
        coarse = _gl(f, lo, hi, 16)
        fine = _gl(f, lo, hi, 32)
        d = float(abs(fine - coarse))
        local = eps * float((hi - lo) / width)
        if d <= max(local, 64 * ulp_err(fine)) or depth >= 50:
            if depth >= 50 and d > local:
                raise IntegrabilityError("adaptive refinement did not converge")
            total += fine
            err += d
        else:
            mid = (lo + hi) / 2
            stack.append((mid, hi, depth + 1))
            stack.append((lo, mid, depth + 1))
    return ExtendedReal(total, err + 4 * count * ulp_err(total))


def _ladder(contrib, lo_tau, hi_tau, eps):
    """Trapezoidal sums of contrib(tau) on nested grids h = 2^-m."""
    def grid_sum(h, odd_only):
        acc = wp.mpf(0)
        k0 = int(wp.ceil(lo_tau / h))
        k1 = int(wp.floor(hi_tau / h))
        for k in range(k0, k1 + 1):
            if odd_only and k % 2 == 0:
                continue
            acc += contrib(k * h)
        return acc

    h = wp.mpf(1)
    S = grid_sum(h, False) * h
    for level in range(1, _MAX_LEVEL + 1):
        h /= 2
        S_new = S / 2 + grid_sum(h, True) * h
        d = abs(S_new - S)
        S = S_new
        if level >= 3 and d <= eps / 64:
            return S, float(d)
    raise IntegrabilityError("double-exponential levels did not converge")


def _tanh_sinh(f, a, b, eps) -> ExtendedReal:
    half = (b - a) / 2
    edge = {"lo": wp.mpf(0), "hi": wp.mpf(0)}

    def contrib(tau):
        x, dist, w = tanh_sinh_node(tau)
        off = half * dist
        t = a + off if x < 0 else b - off
        if t <= a or t >= b:
            return wp.mpf(0)
        c = half * w * f(t, half * w)
        side = "lo" if tau < 0 else "hi"
        if abs(tau) > _TAU_MAX - wp.mpf(1) / 4:
            edge[side] = max(edge[side], abs(c))
        return c

    S, d = _ladder(contrib, -_TAU_MAX, _TAU_MAX, eps)
    worst = max(edge["lo"], edge["hi"])
    if worst > eps:
        raise IntegrabilityError("integrand does not vanish fast enough at a flagged endpoint")
    return ExtendedReal(S, d + float(worst) + 64 * ulp_err(S))


def integrate_finite(spec: IntegralSpec, eps: float = DEFAULT_EPS) -> ExtendedReal:
    """Integral over a finite interval to absolute accuracy ``eps``.

    >>> spec = IntegralSpec(lambda t: 1, ("finite", 0, 1))
    >>> float(integrate_finite(spec))
    1.0
    """
    if spec.domain[0] != "finite":
        raise ConfigurationError("integrate_finite needs a finite domain")
    if not eps > 0:
        raise ConfigurationError("eps must be positive")
    _, a, b = spec.domain
    ev = _Evaluator(spec.integrand)
    if spec.flags & {"log_at_0", "log_at_1"}:
        out = _tanh_sinh(ev, a, b, eps)
    else:
        out = _gauss_adaptive(ev, a, b, eps)
    out = out.widen(ev.err)
    if out.err > eps:
        raise IntegrabilityError(f"integral error {out.err:.3g} exceeds eps={eps:g}")
    return out


def _exp_sinh(f, a, eps) -> ExtendedReal:
    # locate where the integrand has died out on the right
    negligible = eps * 2.0 ** -40
    tau = wp.mpf(0)
    quiet = 0
    step = wp.mpf(1) / 8
    while quiet < 3:
        tau += step
        if tau > _TAU_MAX:
            raise IntegrabilityError("integrand does not decay on the half-line")
        v, w = exp_sinh_node(tau)
        c = w * f(a + v, w)
        quiet = quiet + 1 if abs(c) < negligible else 0
    hi_tau = tau
    edge = [wp.mpf(0)]

    def contrib(t):
        v, w = exp_sinh_node(t)
        x = a + v
        if x <= a:
            return wp.mpf(0)
        c = w * f(x, w)
        if t < -_TAU_MAX + wp.mpf(1) / 4:
            edge[0] = max(edge[0], abs(c))
        return c

    S, d = _ladder(contrib, -_TAU_MAX, hi_tau, eps)
    if edge[0] > eps:
        raise IntegrabilityError("integrand does not vanish fast enough at the endpoint")
    return ExtendedReal(S, d + float(edge[0]) + 64 * ulp_err(S))


_SEGMENTS = 72
_CONDENSE_FROM = 24


def _segment_series(seg, eps) -> ExtendedReal:
    """Sum of seg(0) + seg(1) + ... for eventually alternating, shrinking segments."""
    parts = []
    total = ExtendedReal(0)
    partials = []
    growth = 0
    for m in range(_SEGMENTS):
        s = seg(m)
        parts.append(s)
        total = total + s
        partials.append(total)
        if m >= 4 and abs(s.value) > abs(parts[-2].value) * 1.5:
            growth += 1
            if growth >= 3:
                raise IntegrabilityError("oscillation segments grow; integrand unbounded")
        if m >= 3 and s.value != 0:
            ratios = [abs(b.value / a.value) if a.value != 0 else wp.mpf(1)
                      for a, b in zip(parts[-3:-1], parts[-2:])]
            # segment ratios may still be creeping upwards; inflate the worst one
            ratio = max(ratios) * wp.mpf(5) / 4
            if ratio < wp.mpf(7) / 8:
                bound = abs(s.value) * ratio / (1 - ratio)
                if bound < eps / 256:
                    return total.widen(float(bound))
        elif m >= 3 and s.value == 0 and s.err < eps / 256:
            return total
    try:
        tail = extrapolate(partials[_CONDENSE_FROM:], "alternating")
    except ConvergenceError as exc:
        raise IntegrabilityError(f"segment sums do not alternate: {exc}") from None
    return tail


def integrate_semi_infinite(spec: IntegralSpec, eps: float = DEFAULT_EPS) -> ExtendedReal:
    """Integral over [a, inf) to absolute accuracy ``eps``.

    Decaying integrands go through the exp-sinh map.  With ``spec.period``
    set, the range is split at ``a + m*period`` and the segment sums are
    condensed as an alternating series.
    """
    if spec.domain[0] != "semi_infinite":
        raise ConfigurationError("integrate_semi_infinite needs a semi-infinite domain")
    if not eps > 0:
        raise ConfigurationError("eps must be positive")
    a = spec.domain[1]
    ev = _Evaluator(spec.integrand)
    if spec.period is not None:
        P = to_mpf(spec.period)
        if not P > 0:
            raise ConfigurationError("period must be positive")

        def seg(m):
            return _gauss_adaptive(ev, a + m * P, a + (m + 1) * P, eps / 64)

        out = _segment_series(seg, eps)
    else:
        out = _exp_sinh(ev, a, eps)
    out = out.widen(ev.err)
    if out.err > eps:
        raise IntegrabilityError(f"integral error {out.err:.3g} exceeds eps={eps:g}")
    return out


def integrate_log_oscillatory(spec: IntegralSpec, eps: float = DEFAULT_EPS) -> ExtendedReal:
    """Integral over (0, 1) of an integrand oscillating like sin(ln t).

    With ``u = -ln t`` the integral becomes one over [0, inf) whose sign
    changes sit at ``u = m*pi``.  The first segment uses tanh-sinh (to absorb
    a logarithmic singularity at ``t = 1``), later ones Gauss-Legendre.
    """
    if spec.domain[0] != "finite" or spec.domain[1] != 0 or spec.domain[2] != 1:
        raise ConfigurationError("log-oscillatory integrals run over (0, 1)")
    if not eps > 0:
        raise ConfigurationError("eps must be positive")
    ev = _Evaluator(spec.integrand)

    def h(u, weight=1):
        t = wp.exp(-u)
        if t >= 1 or t <= 0:
            return wp.mpf(0)
        return ev(t, weight * t) * t

    def seg(m):
        lo, hi = m * wp.pi, (m + 1) * wp.pi
        if m == 0:
            return _tanh_sinh(h, lo, hi, eps / 64)
        return _gauss_adaptive(h, lo, hi, eps / 64)

    out = _segment_series(seg, eps).widen(ev.err)
    if out.err > eps:
        raise IntegrabilityError(f"integral error {out.err:.3g} exceeds eps={eps:g}")
    return out
