"""Command-line front end.

Exit status: 0 when everything checked passes, 1 when a check fails and 2 for
usage, lookup or domain errors.  Every option can also be set through an
environment variable named ``ZETAFORGE_<COMMAND>_<OPTION>``.
"""

from __future__ import annotations

import sys
import time
from fractions import Fraction
from typing import Callable, Dict, Sequence, Tuple

import click

from . import __version__
from .constants import constants
from .corpus import catalog_json, evaluate_suite, format_param, list_identities
from .errors import DomainError, UsageError, ZetaforgeError
from .nielsen import xi_series
from .numerics.extended import ExtendedReal, to_mpf
from .report import FORMATS, ReportDocument, RunConfig
from .specfun import (arccot_series, constant_oracles, digamma, dirichlet_eta, harmonic_number,
                      hurwitz_zeta, log_gamma, polygamma, polylog_int, stieltjes_gamma1,
                      upper_gamma0, zeta)

USAGE_EXIT = 2


def _integer(v):
    if isinstance(v, Fraction):
        if v.denominator != 1:
            raise DomainError(f"expected an integer, got {v}")
        return int(v)
    return v


# name -> (argument names, callable)
FUNCTIONS: Dict[str, Tuple[Tuple[str, ...], Callable[..., ExtendedReal]]] = {
    "zeta": (("s",), zeta),
    "hurwitz_zeta": (("s", "a"), hurwitz_zeta),
    "eta": (("s",), dirichlet_eta),
    "polygamma": (("j", "x"), lambda j, x: digamma(x) if _integer(j) == 0
                  else polygamma(_integer(j), x)),
    "harmonic": (("n",), lambda n: harmonic_number(_integer(n))),
    "stieltjes1": (("a",), stieltjes_gamma1),
    "polylog": (("k", "t"), lambda k, t: polylog_int(_integer(k), t)),
    "gamma0": (("x",), upper_gamma0),
    "log_gamma": (("x",), log_gamma),
    "arccot": (("x",), arccot_series),
    "xi": (("x",), xi_series),
}


def parse_real(text: str):
    """Exact rational reading of a decimal or ``p/q`` argument."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise DomainError(f"not a real number: {text!r}") from None


def _arg(v: Fraction):
    return int(v) if v.denominator == 1 else to_mpf(v)


def eval_function(name: str, args: Sequence[str]) -> ExtendedReal:
    if name not in FUNCTIONS:
        raise UsageError(f"unknown function {name!r}; choose from {', '.join(sorted(FUNCTIONS))}")
    names, fn = FUNCTIONS[name]
    if len(args) != len(names):
        raise UsageError(f"{name} takes {len(names)} argument(s): {' '.join(names)}")
    values = [parse_real(a) for a in args]
    return fn(*[v if name_ in ("j", "n", "k") else _arg(v) for name_, v in zip(names, values)])


def _split_ids(raw):
    if raw is None:
        return None
    ids = tuple(t.strip() for t in raw.split(",") if t.strip())
    return ids or None


def run_verify(config: RunConfig) -> Tuple[int, ReportDocument]:
    start = time.perf_counter()
    results = evaluate_suite(config.ids if config.ids else None, jobs=config.jobs,
                             tol=config.tol, max_terms=config.max_terms)
    doc = ReportDocument.build(config, results, time.perf_counter() - start)
    return (0 if doc.all_passed else 1), doc


@click.group(context_settings={"auto_envvar_prefix": "ZETAFORGE",
                               "help_option_names": ["-h", "--help"]})
@click.version_option(__version__, prog_name="zetaforge")
def cli():
    """Zeta-sum numerics and identity verification."""


@cli.command()
@click.option("--ids", help="Comma-separated ids, aliases or prefixes (default: all).")
@click.option("--tol", type=float, help="Override every record's tolerance.")
@click.option("--jobs", type=int, default=1, show_default=True, help="Worker processes.")
@click.option("--report", "report_format", type=click.Choice(FORMATS), default="plain",
              show_default=True)
@click.option("--out", "out_path", type=click.Path(dir_okay=False, writable=True),
              help="Write the report here instead of standard output.")
@click.option("--max-terms", type=int, help="Cap on directly summed terms per series.")
def verify(ids, tol, jobs, report_format, out_path, max_terms):
    """Check registered identities and report residuals."""
    try:
        config = RunConfig(_split_ids(ids), tol, jobs, report_format, out_path, max_terms)
        status, doc = run_verify(config)
    except UsageError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(USAGE_EXIT)
    text = doc.render(report_format)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
        s = doc.summary
        click.echo(f"{s['passed']}/{s['total']} passed; report written to {out_path}", err=True)
    else:
        click.echo(text, nl=False)
    sys.exit(status)


@cli.command("list")
@click.argument("prefix", required=False)
@click.option("--json", "as_json", is_flag=True, help="Emit the JSON catalog.")
def list_cmd(prefix, as_json):
    """List registered identities, optionally by id prefix or cost class."""
    try:
        records = list_identities(prefix)
    except UsageError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(USAGE_EXIT)
    if as_json:
        click.echo(catalog_json(records))
        return
    for r in records:
        alias = f" ({', '.join(r.aliases)})" if r.aliases else ""
        samples = "; ".join(format_param(r.param_names, p) for p in r.params)
        click.echo(f"{r.id}{alias}  [{r.cost_class}, tol {r.tol:g}]  {samples}")
        click.echo(f"    {r.statement}")


@cli.command("eval", context_settings={"ignore_unknown_options": True})
@click.argument("name")
@click.argument("args", nargs=-1)
def eval_cmd(name, args):
    """Evaluate a special function: NAME ARGS... (integers, decimals or p/q)."""
    try:
        v = eval_function(name, args)
    except (ZetaforgeError, ValueError, ArithmeticError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(USAGE_EXIT)
    click.echo(v.to_decimal())
    click.echo(f"+/- {v.err:.3e}")


@cli.command("constants")
@click.option("--check", is_flag=True, help="Recompute each constant independently.")
def constants_cmd(check):
    """Show the stored constants."""
    cache = constants()
    if check:
        cache = cache.cross_validate(constant_oracles())
    for name in cache.names():
        e = cache.entries[name]
        flag = "ok" if e.validated else "UNVERIFIED"
        click.echo(f"{name:<7} {e.digits}  [{flag}]")
        click.echo(f"        {e.provenance}")
    if check and not all(e.validated for e in cache.entries.values()):
        sys.exit(1)


def main(argv=None) -> int:
    """Run the command line and return its exit status."""
    try:
        cli.main(args=argv, prog_name="zetaforge")
    except SystemExit as exc:
        return exc.code or 0
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
