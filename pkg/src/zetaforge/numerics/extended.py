"""Working-precision reals that carry an absolute error bound.

All arithmetic in the package runs in a private mpmath context fixed at 113
bits (about 34 significant decimal digits, the same width as a double-double
accumulator).  The global ``mpmath.mp`` context is never touched.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Union

import mpmath

WORKING_BITS = 113
wp = mpmath.MPContext()
wp.prec = WORKING_BITS

#: Relative rounding unit of the working context.
UNIT_ROUNDOFF = 2.0 ** -WORKING_BITS

#: Decimal digits printed when a value is serialized.
DECIMAL_DIGITS = 34

Number = Union[int, float, Fraction, Any]


def to_mpf(x: Number):
    """Convert ``x`` to a working-precision ``mpf`` (exactly when possible)."""
    if isinstance(x, ExtendedReal):
        return x.value
    if isinstance(x, Fraction):
        return wp.mpf(x.numerator) / x.denominator
    if isinstance(x, str):
        return wp.mpf(x)
    return wp.mpf(x)


def ulp_err(v) -> float:
    """Rounding contribution of one correctly rounded operation producing ``v``."""
    mag = float(abs(v)) if wp.isfinite(v) else math.inf
    return mag * UNIT_ROUNDOFF


def format_decimal(v, digits: int = DECIMAL_DIGITS) -> str:
    """Deterministic decimal rendering used by reports and the CLI."""
    return mpmath.nstr(v, digits, strip_zeros=False, min_fixed=-6, max_fixed=7)


@dataclass(frozen=True)
class ExtendedReal:
    """A 113-bit value together with an absolute error bound ``err``."""

    value: Any
    err: float = 0.0

    def __post_init__(self) -> None:
        v = to_mpf(self.value)
        e = float(self.err)
        if math.isnan(e) or e < 0:
            raise ValueError(f"error bound must be nonnegative, got {self.err!r}")
        if wp.isfinite(v) and not math.isfinite(e):
            raise ValueError("finite value with an infinite error bound")
        object.__setattr__(self, "value", v)
        object.__setattr__(self, "err", e)

    def __reduce__(self):
        # mpf instances of a private context do not pickle; ship the raw tuple
        return (_rebuild, (self.value._mpf_, self.err))

    @classmethod
    def rounded(cls, x: Number) -> "ExtendedReal":
        """Wrap ``x`` charging one rounding unit of its magnitude."""
        v = to_mpf(x)
        return cls(v, ulp_err(v))

    @classmethod
    def coerce(cls, x: Number) -> "ExtendedReal":
        if isinstance(x, ExtendedReal):
            return x
        if isinstance(x, (int, Fraction)):
            v = to_mpf(x)
            exact = isinstance(x, int) or x.denominator & (x.denominator - 1) == 0
            return cls(v, 0.0 if exact else ulp_err(v))
        return cls(to_mpf(x), 0.0)

    # arithmetic -----------------------------------------------------------
    def __add__(self, other: Number) -> "ExtendedReal":
        o = ExtendedReal.coerce(other)
        v = self.value + o.value
        return ExtendedReal(v, self.err + o.err + ulp_err(v))

    __radd__ = __add__

    def __sub__(self, other: Number) -> "ExtendedReal":
        o = ExtendedReal.coerce(other)
        v = self.value - o.value
        return ExtendedReal(v, self.err + o.err + ulp_err(v))

    def __rsub__(self, other: Number) -> "ExtendedReal":
        return ExtendedReal.coerce(other) - self

    def __mul__(self, other: Number) -> "ExtendedReal":
        o = ExtendedReal.coerce(other)
        v = self.value * o.value
        e = (float(abs(self.value)) * o.err + float(abs(o.value)) * self.err
             + self.err * o.err + ulp_err(v))
        return ExtendedReal(v, e)

    __rmul__ = __mul__

    def __truediv__(self, other: Number) -> "ExtendedReal":
        o = ExtendedReal.coerce(other)
        if o.value == 0:
            raise ZeroDivisionError("division by an ExtendedReal equal to zero")
        v = self.value / o.value
        denom = float(abs(o.value)) - o.err
        if denom <= 0:
            e = math.inf
        else:
            e = (self.err + float(abs(v)) * o.err) / denom
        return ExtendedReal(v, e + ulp_err(v))

    def __rtruediv__(self, other: Number) -> "ExtendedReal":
        return ExtendedReal.coerce(other) / self

    def __neg__(self) -> "ExtendedReal":
        return ExtendedReal(-self.value, self.err)

    def __pos__(self) -> "ExtendedReal":
        return self

    def __abs__(self) -> "ExtendedReal":
        return ExtendedReal(abs(self.value), self.err)

    def scaled(self, factor: Number) -> "ExtendedReal":
        return self * factor

    def widen(self, extra: float) -> "ExtendedReal":
        """Same value with ``extra`` added to the error bound."""
        return ExtendedReal(self.value, self.err + float(extra))

    # comparisons use the value only --------------------------------------
    def __lt__(self, other: Number) -> bool:
        return self.value < to_mpf(other)

    def __le__(self, other: Number) -> bool:
        return self.value <= to_mpf(other)

    def __gt__(self, other: Number) -> bool:
        return self.value > to_mpf(other)

    def __ge__(self, other: Number) -> bool:
        return self.value >= to_mpf(other)

    def __float__(self) -> float:
        return float(self.value)

    def contains(self, x: Number, slack: float = 0.0) -> bool:
        """True when ``x`` lies within the error bound (plus ``slack``)."""
        return float(abs(self.value - to_mpf(x))) <= self.err + slack

    def to_decimal(self, digits: int = DECIMAL_DIGITS) -> str:
        return format_decimal(self.value, digits)

    def __str__(self) -> str:
        return f"{self.to_decimal()} +/- {self.err:.2e}"


def _rebuild(raw, err: float) -> ExtendedReal:
    return ExtendedReal(wp.make_mpf(raw), err)
