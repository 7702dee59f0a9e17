"""Truncated expansions in inverse powers of the lattice variable.

An :class:`InverseSeries` stands for ``sum_m c[m] * y^-(p0 + m)``.  Series
summands are expanded this way so their tails can be closed with
:mod:`zetaforge.numerics.tails`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Tuple

from .extended import ExtendedReal, to_mpf, wp
from .tails import HarmonicPowerTail, LogPowerTail, PowerTail, TailModel, TailTerm

DEFAULT_ORDER = 14


def _binom(p, m):
    """Generalized binomial coefficient C(p, m) for real p."""
    acc = wp.mpf(1)
    for i in range(m):
        acc = acc * (p - i) / (i + 1)
    return acc


@dataclass(frozen=True)
class InverseSeries:
    p0: object
    coeffs: Tuple

    def __post_init__(self):
        object.__setattr__(self, "p0", to_mpf(self.p0))
        object.__setattr__(self, "coeffs", tuple(to_mpf(c) for c in self.coeffs))

    @property
    def order(self) -> int:
        return len(self.coeffs)

    # constructors ---------------------------------------------------------
    @classmethod
    def monomial(cls, p, coef=1, order: int = DEFAULT_ORDER) -> "InverseSeries":
        return cls(p, (coef,) + (0,) * (order - 1))

    @classmethod
    def shifted_power(cls, p, delta, order: int = DEFAULT_ORDER) -> "InverseSeries":
        """(y + delta)^-p."""
        p, delta = to_mpf(p), to_mpf(delta)
        return cls(p, tuple(_binom(-p, m) * delta ** m for m in range(order)))

    @classmethod
    def log1p(cls, delta, order: int = DEFAULT_ORDER) -> "InverseSeries":
        """ln(1 + delta / y)."""
        delta = to_mpf(delta)
        return cls(1, tuple((-1) ** m * delta ** (m + 1) / (m + 1) for m in range(order)))

    @classmethod
    def arctan_inverse(cls, delta=0, order: int = DEFAULT_ORDER) -> "InverseSeries":
        """arctan(1 / (y + delta))."""
        total = None
        for k in range((order + 1) // 2 + 1):
            piece = cls.shifted_power(2 * k + 1, delta, order).scale(wp.mpf((-1) ** k) / (2 * k + 1))
            total = piece if total is None else total + piece
        return total.truncate(1, order)

    # algebra --------------------------------------------------------------
    def truncate(self, p0, order: int) -> "InverseSeries":
        """Re-express on the grid p0, p0+1, ... keeping ``order`` slots."""
        p0 = to_mpf(p0)
        off = self.p0 - p0
        k = int(off)
        if k != off or k < 0:
            raise ValueError("exponent grids are incompatible")
        out = [wp.mpf(0)] * order
        for m, c in enumerate(self.coeffs):
            if k + m < order:
                out[k + m] += c
        return InverseSeries(p0, tuple(out))

    def __add__(self, other: "InverseSeries") -> "InverseSeries":
        p0 = min(self.p0, other.p0)
        order = min(int(self.p0 - p0) + self.order, int(other.p0 - p0) + other.order)
        a = self.truncate(p0, order)
        b = other.truncate(p0, order)
        return InverseSeries(p0, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    def __neg__(self) -> "InverseSeries":
        return self.scale(-1)

    def __sub__(self, other: "InverseSeries") -> "InverseSeries":
        return self + (-other)

    def scale(self, c) -> "InverseSeries":
        c = to_mpf(c)
        return InverseSeries(self.p0, tuple(c * x for x in self.coeffs))

    def __mul__(self, other: "InverseSeries") -> "InverseSeries":
        order = min(self.order, other.order)
        out = [wp.mpf(0)] * order
        for i in range(order):
            for j in range(order - i):
                out[i + j] += self.coeffs[i] * other.coeffs[j]
        return InverseSeries(self.p0 + other.p0, tuple(out))

    def evaluate(self, y):
        y = to_mpf(y)
        return sum((c * wp.power(y, -(self.p0 + m)) for m, c in enumerate(self.coeffs)), wp.mpf(0))

    def growth(self) -> float:
        """Rough geometric growth rate of the coefficients."""
        nz = [(m, abs(c)) for m, c in enumerate(self.coeffs) if c != 0]
        if len(nz) < 2:
            return 1.0
        m0, c0 = nz[0]
        return max(1.0, max(float((c / c0) ** (wp.mpf(1) / (m - m0))) for m, c in nz[1:]))

    # tail models ----------------------------------------------------------
    def tail_terms(self, kind: str = "power", log_power: int = 0, keep: int = None):
        """Split into (basis, remainder) tail terms.

        The first ``keep`` coefficients become exact basis terms; the largest
        of the rest, doubled, bounds what was dropped.
        """
        keep = self.order - 3 if keep is None else keep
        basis, rem = [], []
        for m, c in enumerate(self.coeffs[:keep]):
            if c != 0:
                basis.append(TailTerm(_primitive(kind, self.p0 + m, log_power), c))
        dropped = [(m, abs(c)) for m, c in enumerate(self.coeffs[keep:], start=keep) if c != 0]
        if dropped:
            rho = self.growth()
            bound = max(c * wp.power(wp.mpf(rho), -(m - keep)) for m, c in dropped)
            rem.append(TailTerm(_primitive(kind, self.p0 + keep, log_power), ExtendedReal(2 * bound)))
        return basis, rem

    def tail_model(self, kind: str = "power", log_power: int = 0, shift=0,
                   valid_from: int = 1, alternating: bool = False, keep: int = None) -> TailModel:
        basis, rem = self.tail_terms(kind, log_power, keep)
        vf = max(int(valid_from), int(math.ceil(4 * self.growth())))
        return TailModel(tuple(basis), vf, shift, alternating, tuple(rem))


def _primitive(kind: str, p, log_power: int):
    if kind == "power":
        return PowerTail(p) if log_power == 0 else LogPowerTail(p, log_power)
    if kind == "log":
        return LogPowerTail(p, log_power or 1)
    if kind == "harmonic":
        return HarmonicPowerTail(p, log_power)
    raise ValueError(f"unknown primitive kind {kind!r}")


def combine_models(*models: TailModel) -> TailModel:
    """Merge tail models that share a lattice shift and sign pattern."""
    if not models:
        return TailModel.zero()
    shift = models[0].shift
    alt = models[0].alternating
    for m in models[1:]:
        if to_mpf(m.shift) != to_mpf(shift) or m.alternating != alt:
            raise ValueError("tail models must share shift and alternation")
    return TailModel(
        tuple(t for m in models for t in m.basis),
        max(m.valid_from for m in models),
        shift,
        alt,
        tuple(t for m in models for t in m.remainder),
    )


def scale_model(model: TailModel, c) -> TailModel:
    c = ExtendedReal.coerce(c)
    absc = abs(c)
    return TailModel(
        tuple(TailTerm(t.primitive, t.coefficient * c) for t in model.basis),
        model.valid_from, model.shift, model.alternating,
        tuple(TailTerm(t.primitive, t.coefficient * absc) for t in model.remainder),
    )
