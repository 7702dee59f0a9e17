"""Identity records and verification results."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Dict, FrozenSet, Optional, Tuple

from ..errors import ConfigurationError
from ..numerics.extended import ExtendedReal, to_mpf

COST_CLASSES = ("fast", "slow")
DEFAULT_TOL = 1e-9
SLOW_TOL = 1e-8
DEFAULT_EPS = 1e-13


@dataclass(frozen=True)
class Route:
    """One way of evaluating a side of an identity.

    ``evaluate(eps, *param)`` returns an :class:`ExtendedReal`, or ``None``
    when the route does not apply at that sample.  ``terminals`` names the
    final numerical methods the route relies on; it drives the independence
    audit.
    """

    name: str
    evaluate: Callable[..., Optional[ExtendedReal]]
    terminals: FrozenSet[str]

    def __post_init__(self):
        object.__setattr__(self, "terminals", frozenset(self.terminals))
        if not self.terminals:
            raise ConfigurationError(f"route {self.name!r} declares no terminal methods")


@dataclass(frozen=True)
class Published:
    """A reference decimal for an identity and how closely to match it."""

    value: str
    tol: float


def _param_key(values) -> Tuple:
    return tuple(to_mpf(v) for v in values)


def format_param(names: Tuple[str, ...], values: Tuple) -> str:
    if not names:
        return "-"
    return ",".join(f"{n}={v:g}" if isinstance(v, float) else f"{n}={v}"
                    for n, v in zip(names, values))


@dataclass(frozen=True)
class IdentityRecord:
    id: str
    statement: str
    lhs: Route
    rhs: Route
    extra: Tuple[Route, ...] = ()
    param_names: Tuple[str, ...] = ()
    params: Tuple[Tuple, ...] = ((),)
    tol: float = DEFAULT_TOL
    cost_class: str = "fast"
    aliases: Tuple[str, ...] = ()
    published: Optional[Published] = None
    notes: str = ""
    eps: float = DEFAULT_EPS

    def __post_init__(self):
        if self.cost_class not in COST_CLASSES:
            raise ConfigurationError(f"{self.id}: unknown cost class {self.cost_class!r}")
        if not self.tol > 0:
            raise ConfigurationError(f"{self.id}: tolerance must be positive")
        for p in self.params:
            if len(p) != len(self.param_names):
                raise ConfigurationError(f"{self.id}: sample {p!r} does not match {self.param_names}")
        names = [r.name for r in self.routes]
        if len(set(names)) != len(names):
            raise ConfigurationError(f"{self.id}: route names repeat")
        audit = self.independence_audit()
        if not audit["lhs_only"] and not audit["rhs_only"]:
            raise ConfigurationError(
                f"{self.id}: both sides end in the same methods {sorted(self.lhs.terminals)}")

    @property
    def routes(self) -> Tuple[Route, ...]:
        return (self.lhs, self.rhs) + tuple(self.extra)

    @property
    def names(self) -> Tuple[str, ...]:
        return (self.id,) + tuple(self.aliases)

    def independence_audit(self) -> Dict[str, Tuple[str, ...]]:
        """Terminal methods used by only one side, and those shared."""
        a, b = self.lhs.terminals, self.rhs.terminals
        return {
            "lhs_only": tuple(sorted(a - b)),
            "rhs_only": tuple(sorted(b - a)),
            "shared": tuple(sorted(a & b)),
        }

    def find_param(self, param) -> Tuple:
        """The registered sample equal to ``param`` (a scalar or a tuple)."""
        if not isinstance(param, (tuple, list)):
            param = (param,)
        key = _param_key(param)
        for p in self.params:
            if len(p) == len(key) and _param_key(p) == key:
                return p
        raise ConfigurationError(
            f"{self.id}: {param!r} is not a registered sample; samples are "
            + "; ".join(format_param(self.param_names, p) for p in self.params))

    def catalog_entry(self) -> dict:
        return {
            "id": self.id,
            "aliases": list(self.aliases),
            "statement": self.statement,
            "param_names": list(self.param_names),
            "params": [list(p) for p in self.params],
            "tol": self.tol,
            "cost_class": self.cost_class,
            "routes": {r.name: sorted(r.terminals) for r in self.routes},
            "independence": {k: list(v) for k, v in self.independence_audit().items()},
            "published": None if self.published is None else
            {"value": self.published.value, "tol": self.published.tol},
            "notes": self.notes,
        }


@dataclass(frozen=True)
class SampleResult:
    """All route values of one identity at one parameter sample."""

    param: Tuple
    values: Tuple[Tuple[str, ExtendedReal], ...]
    residual: float
    max_err: float
    published_residual: Optional[float] = None

    def value(self, route: str) -> ExtendedReal:
        return dict(self.values)[route]

    @property
    def pairwise(self) -> Dict[Tuple[str, str], float]:
        return {(p, q): float(abs(a.value - b.value))
                for (p, a), (q, b) in itertools.combinations(self.values, 2)}


def sample_result(record: IdentityRecord, param: Tuple,
                  values: Tuple[Tuple[str, ExtendedReal], ...]) -> SampleResult:
    pairs = [float(abs(a.value - b.value))
             for (_, a), (_, b) in itertools.combinations(values, 2)]
    pub = None
    if record.published is not None:
        pub = float(abs(values[0][1].value - to_mpf(record.published.value)))
    return SampleResult(param, values, max(pairs, default=0.0),
                        max((v.err for _, v in values), default=0.0), pub)


@dataclass(frozen=True)
class VerificationResult:
    """Outcome of checking one identity.

    ``param`` is the sample with the largest residual.  The identity passes
    when every sample's pairwise residual is within ``tol``, every route's
    error bound is within ``tol / 10`` and, when a reference decimal is
    attached, the left side matches it.
    """

    id: str
    param: Tuple
    lhs_value: Optional[ExtendedReal]
    rhs_value: Optional[ExtendedReal]
    residual: float
    tol: float
    passed: bool
    elapsed: float = 0.0
    samples: Tuple[SampleResult, ...] = ()
    published_residual: Optional[float] = None
    error: Optional[str] = None
    param_names: Tuple[str, ...] = field(default=())

    @property
    def max_err(self) -> float:
        return max((s.max_err for s in self.samples), default=0.0)


def judge(record: IdentityRecord, samples: Tuple[SampleResult, ...], tol: float,
          elapsed: float) -> VerificationResult:
    worst = max(samples, key=lambda s: s.residual)
    ok = all(s.residual <= tol and s.max_err <= tol / 10 for s in samples)
    pub = worst.published_residual
    if record.published is not None:
        pubs = [s.published_residual for s in samples]
        pub = max(pubs)
        ok = ok and pub <= record.published.tol
    lhs = worst.values[0][1] if worst.values else None
    rhs = worst.values[1][1] if len(worst.values) > 1 else None
    return VerificationResult(record.id, worst.param, lhs, rhs, worst.residual, tol, ok,
                              elapsed, samples, pub, None, record.param_names)


def failed(record: IdentityRecord, tol: float, elapsed: float, message: str) -> VerificationResult:
    return VerificationResult(record.id, (), None, None, float("inf"), tol, False, elapsed,
                              (), None, message, record.param_names)
