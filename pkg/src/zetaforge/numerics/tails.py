"""Analytic closure of power, log-power and harmonic-weighted series tails.

Every tail here is a sum over a unit lattice ``y = n + shift`` for ``n > N``
of ``ln(y)^q * y^(-s)``, possibly with an alternating sign or a digamma
weight.  Non-alternating tails use Euler-Maclaurin summation through B10;
alternating tails use Boole summation with the same derivative machinery.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple, Union

from ..errors import ConfigurationError, DomainError
from .bernoulli import bernoulli
from .extended import ExtendedReal, to_mpf, ulp_err, wp

# EM remainder after the B10 term, expressed through the (vanishing) order-11
# term: |R| <= 2 zeta(11) / (2 pi)^11 * |f^(10)(x0)| when f^(11) keeps one sign.
_EM_REMAINDER = 2 * 1.000494188604119 / (2 * math.pi) ** 11
_EM_ORDER = 11
_MAX_DIRECT = 4096


def _gamma():
    from ..constants import euler_gamma

    return euler_gamma()


def _derivative_polys(s, q: int, order: int):
    """Coefficient lists c_k with f^(k)(x) = x^(-s-k) * sum_i c_k[i] ln(x)^i."""
    c = [wp.mpf(0)] * q + [wp.mpf(1)]
    polys = [list(c)]
    e = wp.mpf(s)
    for _ in range(order):
        new = [-e * c[i] + ((i + 1) * c[i + 1] if i < q else 0) for i in range(q + 1)]
        c = new
        e += 1
        polys.append(list(c))
    return polys


def _largest_real_root(c) -> Optional[float]:
    """Largest real root of sum c[i] L^i, or an upper bound for it."""
    q = len(c) - 1
    while q > 0 and c[q] == 0:
        q -= 1
    if q == 0:
        return None
    if q == 1:
        return float(-c[0] / c[1])
    if q == 2:
        a, b, cc = c[2], c[1], c[0]
        disc = b * b - 4 * a * cc
        if disc < 0:
            return None
        r = wp.sqrt(disc)
        return float(max((-b + r) / (2 * a), (-b - r) / (2 * a)))
    # Fujiwara bound
    lead = abs(c[q])
    return float(2 * max(abs(c[q - i] / lead) ** (wp.mpf(1) / i) for i in range(1, q + 1)))


def _poly_at(c, L):
    acc = wp.mpf(0)
    for coef in reversed(c):
        acc = acc * L + coef
    return acc


def _f(s, q, y):
    return wp.log(y) ** q * wp.power(y, -s)


def _safe_start(s, q, y0) -> int:
    """Number of lattice steps to take directly before the tail expansion is safe."""
    polys = _derivative_polys(s, q, _EM_ORDER + 1)
    limit = None
    for c in polys[_EM_ORDER:]:
        r = _largest_real_root(c)
        if r is not None:
            limit = r if limit is None else max(limit, r)
    # also keep ln y >= 0 so the expansion terms carry their nominal signs
    need = 1.0
    if limit is not None:
        need = max(need, math.exp(min(limit, 700.0)) * 1.0001)
    y = float(y0)
    return 0 if y > need else int(math.ceil(need - y)) + 1


def em_boundary(s, q: int, x0):
    """Euler-Maclaurin boundary terms of f = ln^q x * x^(-s) at x0.

    Returns ``(value, bound)`` with ``value = -f(x0)/2 - sum_j B_2j/(2j)!
    f^(2j-1)(x0)`` (j = 1..5), so that for f decaying with its derivatives
    ``sum_{m>=1} f(x0+m) = int_{x0}^inf f + value`` up to ``bound``.  The
    bound is rigorous when f^(11) keeps one sign beyond x0.
    """
    x0 = to_mpf(x0)
    L0 = wp.log(x0)
    polys = _derivative_polys(s, q, _EM_ORDER)
    inv = 1 / x0
    scale = wp.power(x0, -s)
    derivs = []
    for k in range(_EM_ORDER):
        derivs.append(scale * _poly_at(polys[k], L0))
        scale *= inv
    total = -derivs[0] / 2
    for j in range(1, 6):
        coef = to_mpf(bernoulli(2 * j) / Fraction(math.factorial(2 * j)))
        total -= coef * derivs[2 * j - 1]
    return total, _EM_REMAINDER * float(abs(derivs[10]))


def _em_closure(s, q, x0):
    """sum_{m>=1} f(x0+m) for f = ln^q x * x^(-s), x0 already in the safe region."""
    sigma = s - 1
    L0 = wp.log(x0)
    fact_q = math.factorial(q)
    integral = wp.mpf(0)
    for i in range(q + 1):
        integral += wp.mpf(fact_q) / math.factorial(i) * L0 ** i / sigma ** (q - i + 1)
    integral *= wp.power(x0, -sigma)
    bval, rem = em_boundary(s, q, x0)
    return integral + bval, rem


def _boole_closure(s, q, y0):
    """sum_{m>=0} (-1)^m f(y0+m) for f = ln^q x * x^(-s)."""
    L0 = wp.log(y0)
    polys = _derivative_polys(s, q, _EM_ORDER)
    inv = 1 / y0
    scale = wp.power(y0, -s)
    derivs = []
    for k in range(_EM_ORDER + 1):
        derivs.append(scale * _poly_at(polys[k], L0))
        scale *= inv
    total = derivs[0] / 2
    for k in range(1, 10, 2):
        coef = to_mpf((2 ** (k + 1) - 1) * bernoulli(k + 1) / Fraction(math.factorial(k + 1)))
        total -= coef * derivs[k]
    nxt = to_mpf((2 ** 12 - 1) * bernoulli(12) / Fraction(math.factorial(12)))
    rem = 2 * float(abs(nxt * derivs[11]))
    return total, rem


def lattice_tail(s, N: int, log_power: int = 0, shift=0, alternating: bool = False,
                 rel_target: float = 2.0 ** -80, abs_target: float = 0.0) -> ExtendedReal:
    """Sum over n > N of [(-1)^n] ln(n+shift)^q (n+shift)^(-s).

    The non-alternating form needs ``s > 1``; the alternating form needs
    ``s > 0``.  Lattice points close to the start, where the expansion
    derivatives have not yet settled into one sign or where the expansion
    remainder would exceed both ``rel_target`` relative to the tail and
    ``abs_target``, are summed directly.
    """
    s = to_mpf(s)
    q = int(log_power)
    if q < 0:
        raise DomainError("log power must be nonnegative")
    if alternating:
        if s <= 0:
            raise DomainError("alternating tail needs s > 0")
    elif s <= 1:
        raise DomainError("tail diverges for s <= 1")
    shift = to_mpf(shift)
    y_first = N + 1 + shift
    if y_first <= 0:
        raise DomainError("lattice must stay positive")
    M = N + _safe_start(s, q, y_first if alternating else y_first - 1)
    for _ in range(4):
        if alternating:
            val, rem = _boole_closure(s, q, M + 1 + shift)
            if (M + 1) % 2:
                val = -val
            y = float(M + 1 + shift)
        else:
            val, rem = _em_closure(s, q, M + shift)
            y = float(M + shift)
        # compared in mpf: for large s the tail is below the float range
        budget = max(wp.mpf(rel_target) * abs(val), wp.mpf(abs_target))
        if rem <= budget or M - N >= _MAX_DIRECT or budget == 0:
            break
        # the relative remainder falls like y^-11
        grow = float((wp.mpf(rem) / budget) ** (wp.mpf(1) / 11)) * 1.05
        M = min(N + _MAX_DIRECT, int(math.ceil(y * grow - float(shift))))
    direct = wp.mpf(0)
    absdirect = wp.mpf(0)
    for n in range(N + 1, M + 1):
        t = _f(s, q, n + shift)
        if alternating and n % 2:
            t = -t
        direct += t
        absdirect += abs(t)
    total = direct + val
    err = rem + 32 * ulp_err(absdirect + abs(val)) + (M - N + 4) * ulp_err(absdirect)
    return ExtendedReal(total, err)


def zeta_tail(s, N: int) -> ExtendedReal:
    """Sum of n^(-s) over n > N, via Euler-Maclaurin through B10.

    >>> t = zeta_tail(2, 10)
    >>> abs(float(t) - 0.0951663357) < 1e-9
    True
    """
    if to_mpf(s) <= 1:
        raise DomainError("zeta_tail needs s > 1")
    if N < 1:
        raise DomainError("zeta_tail needs N >= 1")
    return lattice_tail(s, N)


def log_zeta_tail(s, N: int) -> ExtendedReal:
    """Sum of ln(n) n^(-s) over n > N."""
    if to_mpf(s) <= 1:
        raise DomainError("log_zeta_tail needs s > 1")
    if N < 1:
        raise DomainError("log_zeta_tail needs N >= 1")
    return lattice_tail(s, N, log_power=1)


# psi(y+1) + gamma = ln y + gamma + 1/(2y) - 1/(12y^2) + 1/(120y^4) + r,
# |r| <= 1/(252 y^6) for y > 0.
_HARMONIC_EXPANSION = ((1, Fraction(1, 2)), (2, Fraction(-1, 12)), (4, Fraction(1, 120)))
_HARMONIC_REMAINDER = (6, Fraction(1, 252))


def weighted_harmonic_tail(j, N: int, log_power: int = 0, shift=0,
                           alternating: bool = False, abs_target: float = 0.0) -> ExtendedReal:
    """Sum over n > N of [(-1)^n] W(y) ln(y)^q y^(-j), y = n + shift.

    ``W(y) = psi(y+1) + gamma``, which is ``H_n`` when ``shift = 0``.
    Real ``j > 1`` is accepted (``j > 0`` when alternating).
    """
    j = to_mpf(j)
    q = int(log_power)
    if alternating:
        if j <= 0:
            raise DomainError("alternating harmonic tail needs j > 0")
    elif j <= 1:
        raise DomainError("harmonic tail diverges for j <= 1")
    if N + 1 + to_mpf(shift) < 1:
        raise DomainError("harmonic tail lattice must start at y >= 1")
    kw = dict(shift=shift, alternating=alternating, abs_target=abs_target / 8)
    total = lattice_tail(j, N, log_power=q + 1, **kw)
    total = total + lattice_tail(j, N, log_power=q, **kw) * ExtendedReal.rounded(_gamma())
    for p, c in _HARMONIC_EXPANSION:
        total = total + lattice_tail(j + p, N, log_power=q, **kw) * c
    p, c = _HARMONIC_REMAINDER
    bound = lattice_tail(j + p, N, log_power=q, shift=shift, rel_target=2.0 ** -20)
    return total.widen(float(c) * (float(bound.value) + bound.err))


def harmonic_tail(j, N: int) -> ExtendedReal:
    """Sum of H_n n^(-j) over n > N, from the asymptotic expansion of H_n."""
    if to_mpf(j) < 2:
        raise DomainError("harmonic_tail needs j >= 2")
    if N < 1:
        raise DomainError("harmonic_tail needs N >= 1")
    return weighted_harmonic_tail(j, N)


# ---------------------------------------------------------------------------
# tail models consumed by the summation engine


@dataclass(frozen=True)
class PowerTail:
    s: object


@dataclass(frozen=True)
class LogPowerTail:
    s: object
    log_power: int = 1


@dataclass(frozen=True)
class HarmonicPowerTail:
    j: object
    log_power: int = 0


@dataclass(frozen=True)
class GeometricTail:
    """Sum of ratio^n over n > N (0 <= ratio < 1)."""
    ratio: object


Primitive = Union[PowerTail, LogPowerTail, HarmonicPowerTail, GeometricTail]


@dataclass(frozen=True)
class TailTerm:
    primitive: Primitive
    coefficient: ExtendedReal

    def __post_init__(self):
        object.__setattr__(self, "coefficient", ExtendedReal.coerce(self.coefficient))


def _as_terms(items) -> Tuple[TailTerm, ...]:
    out = []
    for it in items:
        if isinstance(it, TailTerm):
            out.append(it)
        else:
            prim, coef = it
            out.append(TailTerm(prim, coef))
    return tuple(out)


@dataclass(frozen=True)
class TailModel:
    """Linear combination of tail primitives describing sum_{n>N} term(n).

    ``basis`` terms are summed with their signs.  ``remainder`` terms are
    evaluated with absolute coefficients and only widen the error bound.
    For alternating models the basis describes ``(-1)^n`` times the
    magnitude of the term; the remainder is still bounded without signs.
    """

    basis: Tuple[TailTerm, ...] = ()
    valid_from: int = 1
    shift: object = 0
    alternating: bool = False
    remainder: Tuple[TailTerm, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "basis", _as_terms(self.basis))
        object.__setattr__(self, "remainder", _as_terms(self.remainder))

    @classmethod
    def zero(cls, valid_from: int = 1) -> "TailModel":
        return cls((), valid_from)

    @property
    def has_logs(self) -> bool:
        return any(isinstance(t.primitive, (LogPowerTail, HarmonicPowerTail))
                   for t in self.basis + self.remainder)

    def validate(self) -> None:
        floor = 0 if self.alternating else 1
        for t in self.basis:
            self._check(t, floor)
        for t in self.remainder:
            self._check(t, 1)

    @staticmethod
    def _check(t: TailTerm, floor) -> None:
        if not wp.isfinite(t.coefficient.value):
            raise ConfigurationError("tail coefficient is not finite")
        p = t.primitive
        if isinstance(p, GeometricTail):
            r = to_mpf(p.ratio)
            if not (0 <= r < 1):
                raise ConfigurationError("geometric tail needs 0 <= ratio < 1")
            return
        s = to_mpf(p.j if isinstance(p, HarmonicPowerTail) else p.s)
        if s <= floor:
            raise ConfigurationError(f"divergent tail primitive {p!r}")

    def _primitive(self, p: Primitive, N: int, alternating: bool,
                   target: float = 0.0) -> ExtendedReal:
        if isinstance(p, GeometricTail):
            r = to_mpf(p.ratio)
            v = wp.power(r, N + 1) / (1 - r)
            return ExtendedReal(v, 4 * ulp_err(v))
        if isinstance(p, PowerTail):
            return lattice_tail(p.s, N, 0, self.shift, alternating, abs_target=target)
        if isinstance(p, LogPowerTail):
            return lattice_tail(p.s, N, p.log_power, self.shift, alternating, abs_target=target)
        return weighted_harmonic_tail(p.j, N, p.log_power, self.shift, alternating,
                                      abs_target=target)

    def remainder_bound(self, N: int) -> float:
        total = 0.0
        for t in self.remainder:
            v = self._primitive(t.primitive, N, False, math.inf)
            total += (float(abs(t.coefficient.value)) + t.coefficient.err) * (float(abs(v.value)) + v.err)
        return total

    def evaluate(self, N: int, eps: float = 0.0) -> ExtendedReal:
        """Tail value beyond ``N`` with every modelling error in ``err``.

        A positive ``eps`` lets each primitive stop refining once its share
        of the absolute error budget is met.
        """
        if N < self.valid_from:
            raise ConfigurationError(f"tail model valid only from N >= {self.valid_from}")
        self.validate()
        total = ExtendedReal(0)
        for t in self.basis:
            share = eps / (16 * (1 + len(self.basis)) * max(1.0, float(abs(t.coefficient.value))))
            total = total + t.coefficient * self._primitive(t.primitive, N, self.alternating, share)
        return total.widen(self.remainder_bound(N))
