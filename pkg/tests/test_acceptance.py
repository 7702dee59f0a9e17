"""Acceptance gate: one test per criterion, each summarised in the terminal report."""

import random
import time

import pytest

from cases import TAIL_OPS, tail_inconsistencies
from zetaforge.cli import run_verify
from zetaforge.corpus import evaluate_identity, registry
from zetaforge.corpus import evaluators as ev
from zetaforge.nielsen import xi_integral, xi_mean, xi_series
from zetaforge.numerics import extrapolate, sum_series, wp
from zetaforge.report import RunConfig
from zetaforge.specfun import digamma, hurwitz_zeta, polygamma, stieltjes_gamma1

FLAGSHIPS = {
    "E1.1": ("-0.102321900856", 1e-9),
    "E1.13": ("0.262903", 5e-6),
    "E1.29": ("0.0868281269673", 1e-10),
    "E1.38": ("-0.215191890953", 1e-9),
}


def test_criterion_1_flagship_decimals(criterion):
    start = time.perf_counter()
    status, doc = run_verify(RunConfig(ids=("E1.1", "P1", "P2", "P3"), report_format="json"))
    wall = time.perf_counter() - start
    rows = {r.id: r for r in doc.rows}
    deltas = {i: abs(wp.mpf(rows[i].lhs) - wp.mpf(v)) for i, (v, _) in FLAGSHIPS.items()}
    criterion(", ".join(f"{i} |d|={float(d):.1e}" for i, d in deltas.items())
              + f"; {wall:.1f} s")
    assert status == 0 and len(rows) == 4
    for i, (_, tol) in FLAGSHIPS.items():
        assert deltas[i] < tol, i
    assert wall < 30


@pytest.mark.slow
def test_criterion_2_full_corpus(criterion):
    start = time.perf_counter()
    status, doc = run_verify(RunConfig(jobs=4, report_format="json"))
    wall = time.perf_counter() - start
    failed = [r.id for r in doc.rows if not r.passed]
    criterion(f"{doc.summary['passed']}/{doc.summary['total']} records, "
              f"max residual {float(doc.summary['max_residual']):.1e}, {wall:.1f} s at jobs=4")
    assert len(doc.rows) >= 40
    assert status == 0, failed
    for r in doc.rows:
        assert float(r.residual) < float(r.tol), r.id
        assert float(r.tol) <= 1e-8
    assert wall < 120


def test_criterion_3_stieltjes_relation(criterion):
    l2 = wp.log(2)
    diff = stieltjes_gamma1(1).value - stieltjes_gamma1(wp.mpf(1) / 2).value
    delta = abs(diff - (l2 * l2 + 2 * wp.euler * l2))
    criterion(f"|d|={float(delta):.1e}")
    assert delta < 1e-12


def test_criterion_4_representation_cross_checks(criterion):
    worst = {}
    for ident in ("E2.1", "E2.2", "E2.3", "E2.4", "E2.5", "E2.6", "E2.12"):
        res = evaluate_identity(ident, tol_override=1e-10)
        assert res.passed, ident
        assert len(res.samples) >= 5
        worst[ident] = res.residual
    xi_points = [wp.mpf(x) for x in ("0.5", "1", "1.5", "2", "5")]
    xi_gap = max(abs(xi_series(x).value - xi_integral(x).value) for x in xi_points)
    mean = xi_mean()
    mean_gap = max(mean.residuals.values())
    criterion(f"by-parts forms max {max(worst.values()):.1e}, xi routes {float(xi_gap):.1e}, "
              f"xi mean routes {float(mean_gap):.1e}")
    assert xi_gap < 1e-11
    assert len(mean.routes) == 3 and mean_gap < 1e-9


def test_criterion_5_quadrature_oracles(criterion):
    gaps = {}
    for ident, tol, samples in (("E1.49", 1e-12, [0, 1, 2]),
                                ("E1.27", 1e-12, None),
                                ("E1.45", 1e-9, [1, wp.mpf(1) / 2, -1])):
        res = evaluate_identity(ident, tol_override=tol)
        assert res.passed, ident
        if samples is not None:
            assert [s.param[0] for s in res.samples] == samples
        gaps[ident] = res.residual
    direct = max(abs(ev.sine_laplace(k, 1e-14).value - wp.acot(k) if k else
                     ev.sine_laplace(k, 1e-14).value - wp.pi / 2) for k in (0, 1, 2))
    gaps["cot"] = float(direct)
    criterion(", ".join(f"{k} {v:.1e}" for k, v in gaps.items()))
    assert direct < 1e-12


def test_criterion_6_oracle_equivalence(criterion):
    catalog = ev.series_catalog()
    assert len(catalog) >= 5
    series_gap = 0.0
    for item in catalog:
        ns = [2 ** k for k in range(4, 15 if item.model == "log-over-n" else 13)]
        closed = sum_series(item.spec, 1e-13)
        limit = extrapolate(ev.partial_sums(item.spec, ns), item.model, ns)
        series_gap = max(series_gap, float(abs(closed.value - limit.value)))
    broken = {name: tail_inconsistencies(tail, term) for name, tail, term in TAIL_OPS}
    broken = {k: v for k, v in broken.items() if v}

    rng = random.Random(20241018)
    rec = 0.0
    for _ in range(100):
        x = wp.mpf(rng.uniform(0.05, 50))
        s = wp.mpf(rng.uniform(1.1, 8))
        a = wp.mpf(rng.uniform(0.1, 20))
        rec = max(rec,
                  float(abs(digamma(x + 1).value - digamma(x).value - 1 / x)),
                  float(abs(polygamma(1, x + 1).value - polygamma(1, x).value + 1 / (x * x))),
                  float(abs(hurwitz_zeta(s, a).value - hurwitz_zeta(s, a + 1).value
                            - wp.power(a, -s))))
    criterion(f"{len(catalog)} series max gap {series_gap:.1e}, "
              f"{len(TAIL_OPS)} tails consistent={not broken}, recurrences {rec:.1e}")
    assert series_gap < 1e-8
    assert not broken, broken
    assert rec < 1e-20


def test_criterion_7_assembly(criterion):
    assembled, _ = ev.assemble_e1_1()
    delta = abs(assembled.value - ev.e1_1_rhs().value)
    criterion(f"|d|={float(delta):.1e}")
    assert delta < 1e-10


def test_registry_covers_the_gate():
    ids = {r.id for r in registry()}
    assert set(FLAGSHIPS) <= ids
