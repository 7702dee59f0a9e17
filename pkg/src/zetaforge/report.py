"""Run configuration and the verification report document."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Optional, Sequence, Tuple

from . import __version__
from .corpus.records import VerificationResult, format_param
from .errors import UsageError

SCHEMA = 1
FORMATS = ("json", "markdown", "plain")


@dataclass(frozen=True)
class RunConfig:
    ids: Optional[Tuple[str, ...]] = None
    tol: Optional[float] = None
    jobs: int = 1
    report_format: str = "plain"
    out_path: Optional[str] = None
    max_terms: Optional[int] = None

    def __post_init__(self):
        if self.jobs < 1:
            raise UsageError("jobs must be at least 1")
        if self.tol is not None and not self.tol > 0:
            raise UsageError("tolerance must be positive")
        if self.report_format not in FORMATS:
            raise UsageError(f"report format must be one of {', '.join(FORMATS)}")
        if self.max_terms is not None and self.max_terms < 1:
            raise UsageError("max-terms must be positive")
        if self.ids is not None:
            object.__setattr__(self, "ids", tuple(self.ids))

    def echo(self) -> dict:
        d = asdict(self)
        d["ids"] = None if self.ids is None else list(self.ids)
        return d


def _num(x: Optional[float]) -> Optional[str]:
    return None if x is None else repr(float(x))


@dataclass(frozen=True)
class ReportRow:
    """One identity in a report; numbers are decimal strings."""

    id: str
    param: str
    lhs: Optional[str]
    rhs: Optional[str]
    residual: str
    tol: str
    max_err: str
    passed: bool
    samples: int
    published_residual: Optional[str] = None
    error: Optional[str] = None

    @classmethod
    def from_result(cls, r: VerificationResult) -> "ReportRow":
        return cls(
            id=r.id,
            param=format_param(r.param_names, r.param) if r.param else "-",
            lhs=None if r.lhs_value is None else r.lhs_value.to_decimal(),
            rhs=None if r.rhs_value is None else r.rhs_value.to_decimal(),
            residual=_num(r.residual),
            tol=_num(r.tol),
            max_err=_num(r.max_err),
            passed=r.passed,
            samples=len(r.samples),
            published_residual=_num(r.published_residual),
            error=r.error,
        )


@dataclass(frozen=True)
class ReportDocument:
    """A verification report.

    Everything except ``timing`` is a function of the configuration, so two
    runs with the same settings agree once ``timing`` is dropped.
    """

    tool_version: str
    config: dict
    rows: Tuple[ReportRow, ...]
    summary: dict
    timing: dict = field(default_factory=dict, compare=False)
    schema: int = SCHEMA

    @classmethod
    def build(cls, config: RunConfig, results: Sequence[VerificationResult],
              wall: float) -> "ReportDocument":
        rows = tuple(ReportRow.from_result(r) for r in results)
        passed = sum(r.passed for r in results)
        summary = {
            "total": len(rows),
            "passed": passed,
            "failed": len(rows) - passed,
            "max_residual": _num(max((r.residual for r in results), default=0.0)),
        }
        timing = {"wall_seconds": round(wall, 3),
                  "per_record": {r.id: round(r.elapsed, 3) for r in results}}
        return cls(__version__, config.echo(), rows, summary, timing)

    @property
    def all_passed(self) -> bool:
        return self.summary["failed"] == 0

    def to_dict(self) -> dict:
        return {
            "schema": self.schema,
            "tool_version": self.tool_version,
            "config": self.config,
            "rows": [asdict(r) for r in self.rows],
            "summary": self.summary,
            "timing": self.timing,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "ReportDocument":
        doc = json.loads(text)
        if doc.get("schema") != SCHEMA:
            raise UsageError(f"unsupported report schema {doc.get('schema')!r}")
        rows = tuple(ReportRow(**r) for r in doc["rows"])
        return cls(doc["tool_version"], doc["config"], rows, doc["summary"],
                   doc.get("timing", {}), doc["schema"])

    def to_markdown(self) -> str:
        lines = [
            f"# zetaforge verification ({self.tool_version})",
            "",
            "| id | param | lhs | residual | tol | max err | result |",
            "|---|---|---|---|---|---|---|",
        ]
        for r in self.rows:
            verdict = "pass" if r.passed else "FAIL"
            lines.append(f"| {r.id} | {r.param} | {r.lhs or '-'} | {r.residual} | {r.tol} "
                         f"| {r.max_err} | {verdict} |")
        s = self.summary
        lines += ["", f"{s['passed']}/{s['total']} passed, max residual {s['max_residual']}"]
        errors = [r for r in self.rows if r.error]
        if errors:
            lines += ["", "## Errors", ""] + [f"- {r.id}: {r.error}" for r in errors]
        return "\n".join(lines) + "\n"

    def to_plain(self) -> str:
        lines = []
        for r in self.rows:
            verdict = "PASS" if r.passed else "FAIL"
            line = f"{verdict}  {r.id:<6} {r.param:<16} residual={r.residual:<10} tol={r.tol}"
            if r.error:
                line += f"  error: {r.error}"
            lines.append(line)
        s = self.summary
        lines.append(f"{s['passed']}/{s['total']} passed, {s['failed']} failed, "
                     f"max residual {s['max_residual']}")
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json()
        if fmt == "markdown":
            return self.to_markdown()
        return self.to_plain()

