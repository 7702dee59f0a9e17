"""Vetted mathematical constants stored as decimal strings."""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from types import MappingProxyType
from typing import Callable, Dict, Mapping, Optional

from .errors import ConfigurationError
from .numerics.extended import ExtendedReal, ulp_err, wp

SCHEMA_VERSION = 1
REQUIRED = ("pi", "gamma", "ln2", "zeta2", "zeta3", "gamma1")


@dataclass(frozen=True)
class ConstantEntry:
    digits: str
    provenance: str
    validated: bool = False

    def value(self) -> ExtendedReal:
        v = wp.mpf(self.digits)
        # string rounding plus the truncation of the stored decimal
        sig = len(self.digits.lstrip("-0.").replace(".", ""))
        return ExtendedReal(v, ulp_err(v) + float(abs(v)) * 10.0 ** (1 - sig))


_DEFAULTS = {
    "pi": ("3.141592653589793238462643383279502884197",
           "Machin formula 4(4 acot 5 - acot 239) with alternating arc-cotangent series"),
    "gamma": ("0.5772156649015328606065120900824024310422",
              "Euler-Maclaurin closure of H_N - ln N"),
    "ln2": ("0.6931471805599453094172321214581765680755",
            "polylogarithm Li_1(1/2) series"),
    "zeta2": ("1.644934066848226436472415166646025189219",
              "pi^2/6 from the stored pi"),
    "zeta3": ("1.202056903159594285399738161511449990765",
              "direct sum with Euler-Maclaurin tail"),
    "gamma1": ("-0.07281584548367672486058637587490131913774",
               "limit definition of the first Stieltjes constant with Euler-Maclaurin closure"),
}


class ConstantsCache:
    """Read-only map from constant name to :class:`ConstantEntry`."""

    __slots__ = ("_entries",)

    def __init__(self, entries: Mapping[str, ConstantEntry]):
        missing = [n for n in REQUIRED if n not in entries]
        if missing:
            raise ConfigurationError(f"constants cache lacks {', '.join(missing)}")
        for name, e in entries.items():
            if len(e.digits.lstrip("-0.").replace(".", "")) < 34:
                raise ConfigurationError(f"constant {name} stored with fewer than 34 digits")
            wp.mpf(e.digits)
        object.__setattr__(self, "_entries", MappingProxyType(dict(entries)))

    def __setattr__(self, name, value):
        raise AttributeError("ConstantsCache is immutable")

    @classmethod
    def default(cls) -> "ConstantsCache":
        return cls({n: ConstantEntry(d, p, True) for n, (d, p) in _DEFAULTS.items()})

    @property
    def entries(self) -> Mapping[str, ConstantEntry]:
        return self._entries

    def names(self):
        return sorted(self._entries)

    def __getitem__(self, name: str) -> ExtendedReal:
        try:
            return self._entries[name].value()
        except KeyError:
            raise KeyError(f"unknown constant {name!r}") from None

    def __contains__(self, name) -> bool:
        return name in self._entries

    def __eq__(self, other) -> bool:
        return isinstance(other, ConstantsCache) and dict(self._entries) == dict(other._entries)

    def __hash__(self):
        return hash(tuple(sorted(self._entries.items())))

    def cross_validate(self, oracles: Mapping[str, Callable[[], ExtendedReal]],
                       digits: int = 25) -> "ConstantsCache":
        """Return a copy whose ``validated`` flags reflect agreement with ``oracles``."""
        out: Dict[str, ConstantEntry] = {}
        for name, entry in self._entries.items():
            ok = entry.validated
            if name in oracles:
                ref = oracles[name]()
                v = entry.value()
                scale = max(1.0, float(abs(v.value)))
                ok = float(abs(ref.value - v.value)) + ref.err <= scale * 10.0 ** -digits
            out[name] = replace(entry, validated=bool(ok))
        return ConstantsCache(out)

    def to_json(self) -> str:
        doc = {
            "schema": SCHEMA_VERSION,
            "constants": {
                n: {"digits": e.digits, "provenance": e.provenance, "validated": e.validated}
                for n, e in sorted(self._entries.items())
            },
        }
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "ConstantsCache":
        doc = json.loads(text)
        if doc.get("schema") != SCHEMA_VERSION:
            raise ConfigurationError(f"unsupported constants schema {doc.get('schema')!r}")
        return cls({
            n: ConstantEntry(str(d["digits"]), str(d["provenance"]), bool(d["validated"]))
            for n, d in doc["constants"].items()
        })


_CACHE: Optional[ConstantsCache] = None


def constants() -> ConstantsCache:
    """The process-wide default cache."""
    global _CACHE
    if _CACHE is None:
        _CACHE = ConstantsCache.default()
    return _CACHE


def euler_gamma():
    return wp.mpf(_DEFAULTS["gamma"][0])
