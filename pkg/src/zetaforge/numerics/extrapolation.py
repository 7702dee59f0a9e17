"""Limits of partial-sum sequences, used as a check on tail closure."""

from __future__ import annotations

import enum
from typing import Optional, Sequence

from ..errors import ConfigurationError, ConvergenceError
from .extended import ExtendedReal, ulp_err, wp

MIN_PARTIALS = 6


class ExtrapolationModel(str, enum.Enum):
    LOG_OVER_N = "log-over-n"
    INVERSE_N = "inverse-n"
    ALTERNATING = "alternating"


def _check_monotone(values) -> None:
    diffs = [b - a for a, b in zip(values, values[1:])]
    signs = {1 if d > 0 else -1 for d in diffs if d != 0}
    if len(signs) > 1:
        raise ConvergenceError("partial sums are not monotone")
    mags = [abs(d) for d in diffs]
    for a, b in zip(mags[1:], mags[2:]):
        if b > a * (1 + 2.0 ** -60):
            raise ConvergenceError("partial-sum increments are not shrinking")


def _check_alternating(values) -> None:
    diffs = [b - a for a, b in zip(values, values[1:])]
    for a, b in zip(diffs, diffs[1:]):
        if a * b >= 0:
            raise ConvergenceError("partial sums do not alternate")


def _richardson(values, ratio):
    table = [list(values)]
    for j in range(1, len(values)):
        f = wp.power(ratio, j) - 1
        prev = table[-1]
        table.append([prev[i] + (prev[i] - prev[i - 1]) / f for i in range(1, len(prev))])
    best = table[-1][-1]
    err = max(abs(best - table[-2][-1]), abs(best - table[-2][-2])) if len(table) > 2 else abs(best - values[-1])
    return best, err


def _log_fit(values, ns, K):
    """Solve S_N = S + sum_k (a_k ln N + b_k) N^-k on the last 2K+1 points."""
    pts = list(zip(ns, values))[-(2 * K + 1):]
    rows, rhs = [], []
    for n, v in pts:
        n = wp.mpf(n)
        L = wp.log(n)
        row = [wp.mpf(1)]
        for k in range(1, K + 1):
            row += [L / n ** k, 1 / n ** k]
        rows.append(row)
        rhs.append(v)
    sol = wp.lu_solve(wp.matrix(rows), wp.matrix(rhs))
    return sol[0]


def extrapolate(partials: Sequence, model, ns: Optional[Sequence[int]] = None) -> ExtendedReal:
    """Estimate the limit of ``partials``.

    ``inverse-n`` and ``log-over-n`` expect partial sums at geometrically
    spaced ``ns`` (default ``2^k``) and eliminate ``N^-k`` respectively
    ``ln(N) N^-k`` and ``N^-k`` error terms.  ``alternating`` expects
    consecutive partial sums and applies repeated pairwise averaging.
    """
    model = ExtrapolationModel(model)
    items = [ExtendedReal.coerce(p) for p in partials]
    values = [p.value for p in items]
    in_err = max((p.err for p in items), default=0.0)
    if values and all(v == values[0] for v in values):
        return ExtendedReal(values[0], in_err)
    if len(values) < MIN_PARTIALS:
        raise ConfigurationError(f"need at least {MIN_PARTIALS} partial sums, got {len(values)}")
    if ns is None:
        ns = [2 ** k for k in range(len(values))] if model != ExtrapolationModel.ALTERNATING \
            else list(range(len(values)))
    if len(ns) != len(values):
        raise ConfigurationError("ns and partials differ in length")

    if model == ExtrapolationModel.ALTERNATING:
        _check_alternating(values)
        level = list(values)
        while len(level) > 2:
            level = [(a + b) / 2 for a, b in zip(level, level[1:])]
        best = (level[0] + level[1]) / 2
        err = abs(level[0] - level[1])
    elif model == ExtrapolationModel.INVERSE_N:
        _check_monotone(values)
        ratio = wp.mpf(ns[1]) / ns[0]
        best, err = _richardson(values, ratio)
    else:
        _check_monotone(values)
        K = (len(values) - 1) // 2
        best = _log_fit(values, ns, K)
        err = abs(best - _log_fit(values, ns, K - 1)) if K > 1 else abs(best - values[-1])
    return ExtendedReal(best, float(err) + in_err + 8 * ulp_err(best))
