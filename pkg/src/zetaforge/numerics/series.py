"""Adaptive tail-closed summation of infinite series."""

from __future__ import annotations

import contextlib
import contextvars
import enum
import functools
from dataclasses import dataclass
from typing import Callable, Iterator, Optional

from ..errors import ConfigurationError, ConvergenceError, PrecisionError
from .extended import UNIT_ROUNDOFF, ExtendedReal, to_mpf, wp
from .tails import TailModel

DEFAULT_MAX_TERMS = 2 ** 24

_max_terms: contextvars.ContextVar[int] = contextvars.ContextVar("max_terms", default=DEFAULT_MAX_TERMS)


@contextlib.contextmanager
def max_terms(limit: int) -> Iterator[None]:
    """Temporarily cap the number of directly summed terms."""
    if limit < 1:
        raise ConfigurationError("max_terms must be positive")
    token = _max_terms.set(int(limit))
    try:
        yield
    finally:
        _max_terms.reset(token)


def current_max_terms() -> int:
    return _max_terms.get()


def capped_cache(maxsize: Optional[int] = 128):
    """``functools.lru_cache`` that keeps separate entries per active term cap."""

    def wrap(fn):
        @functools.lru_cache(maxsize=maxsize)
        def keyed(cap, *args, **kwargs):
            return fn(*args, **kwargs)

        @functools.wraps(fn)
        def call(*args, **kwargs):
            return keyed(current_max_terms(), *args, **kwargs)

        call.cache_clear = keyed.cache_clear
        return call

    return wrap


class SeriesKind(str, enum.Enum):
    POSITIVE_MONOTONE = "positive-monotone"
    ALTERNATING = "alternating"
    GENERAL = "general"


@dataclass(frozen=True)
class SeriesSpec:
    """A series ``sum_{n >= n0} term(n)`` plus a model of its tail.

    With ``weight="harmonic"`` the term rule is called as ``term(n, w)``
    where ``w = psi(n + weight_shift + 1) + gamma`` is maintained by running
    summation from ``weight_init`` (its value at ``n0 - 1``).  For
    ``weight_shift = 0`` and ``n0 = 1`` this is the harmonic number ``H_n``.
    """

    term: Callable
    n0: int = 1
    tail_model: TailModel = TailModel()
    kind: SeriesKind = SeriesKind.GENERAL
    weight: Optional[str] = None
    weight_shift: object = 0
    weight_init: object = 0
    n_max: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "kind", SeriesKind(self.kind))
        if self.weight not in (None, "harmonic"):
            raise ConfigurationError(f"unknown weight {self.weight!r}")


def _partial_sums(spec: SeriesSpec, checkpoints):
    """Yield (N, value, abs_sum, input_err) at each checkpoint N (ascending)."""
    it = iter(checkpoints)
    target = next(it, None)
    total = wp.mpf(0)
    absum = wp.mpf(0)
    in_err = 0.0
    w = to_mpf(spec.weight_init)
    a = to_mpf(spec.weight_shift)
    n = spec.n0
    while target is not None:
        while n <= target:
            if spec.weight:
                w += 1 / (n + a)
                t = spec.term(n, w)
            else:
                t = spec.term(n)
            if isinstance(t, ExtendedReal):
                in_err += t.err
                t = t.value
            else:
                t = to_mpf(t)
            total += t
            absum += abs(t)
            n += 1
        yield target, total, absum, in_err
        target = next(it, None)


def _direct_err(count: int, absum, weighted: bool) -> float:
    # one rounding per addition plus the rounding inside each term
    per = 24 if weighted else 16
    return float(absum) * UNIT_ROUNDOFF * (per + 2 * count)


def sum_series(spec: SeriesSpec, eps: float = 1e-15) -> ExtendedReal:
    """Sum ``spec`` to absolute accuracy ``eps``.

    Terms are added directly up to the smallest ``N = 2^k`` at which the
    tail model is both valid and accurate to ``eps/4``; the modelled tail
    is then added.  Past the term cap the partial sums are extrapolated
    instead.
    """
    eps = float(eps)
    if not eps > 0:
        raise ConfigurationError("eps must be positive")
    model = spec.tail_model
    model.validate()
    if eps < 2.0 ** -100:
        raise PrecisionError(f"eps={eps:g} is below working precision")

    if spec.n_max is not None:
        if spec.n_max < spec.n0:
            return ExtendedReal(0)
        (_, v, absum, in_err), = _partial_sums(spec, [spec.n_max])
        return ExtendedReal(v, in_err + _direct_err(spec.n_max - spec.n0 + 1, absum, bool(spec.weight)))

    cap = current_max_terms()
    N = 1
    while N < max(spec.n0 - 1, model.valid_from):
        N *= 2
    while N <= cap and model.remainder_bound(N) >= eps / 8:
        N *= 2
    while True:
        if N > cap:
            return _escalate(spec, eps, cap)
        tail = model.evaluate(N, eps / 4)
        if tail.err < eps / 4:
            break
        N *= 2

    (_, v, absum, in_err), = _partial_sums(spec, [N])
    direct = ExtendedReal(v, in_err + _direct_err(N - spec.n0 + 1, absum, bool(spec.weight)))
    total = direct + tail
    if total.err > eps:
        raise PrecisionError(
            f"requested eps={eps:g} not reached (err={total.err:.3g}) at working precision")
    return total


def _escalate(spec: SeriesSpec, eps: float, cap: int) -> ExtendedReal:
    from .extrapolation import ExtrapolationModel, extrapolate

    if spec.tail_model.alternating or spec.kind == SeriesKind.ALTERNATING:
        start = max(spec.n0, cap - 40)
        ns = list(range(start, start + 40))
        model = ExtrapolationModel.ALTERNATING
    else:
        top = 1
        while top * 2 <= cap:
            top *= 2
        ns = [top >> k for k in range(9, -1, -1) if (top >> k) >= spec.n0]
        model = (ExtrapolationModel.LOG_OVER_N if spec.tail_model.has_logs or spec.weight
                 else ExtrapolationModel.INVERSE_N)
    partials = [ExtendedReal(v, e + _direct_err(n - spec.n0 + 1, a, bool(spec.weight)))
                for n, v, a, e in _partial_sums(spec, ns)]
    out = extrapolate(partials, model, ns=ns)
    if out.err > eps:
        raise ConvergenceError(
            f"term cap {cap} reached; extrapolated err {out.err:.3g} exceeds eps={eps:g}")
    return out
