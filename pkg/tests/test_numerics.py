import pickle
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cases import TAIL_OPS, direct_sum, tail_inconsistencies
from oracles import (HARMONIC_TAIL_2_1000, LOG_ZETA_TAIL_2_1E4, ZETA_TAIL_3_50, close)
from zetaforge.corpus import evaluators as ev
from zetaforge.errors import (ConfigurationError, ConvergenceError, DomainError,
                              PrecisionError)
from zetaforge.numerics import (ExtendedReal, InverseSeries, PowerTail, SeriesSpec, TailModel,
                                compensated_sum, extrapolate, harmonic_tail, log_zeta_tail,
                                sum_series, wp, zeta_tail)
from zetaforge.numerics.extended import ulp_err

PI2_6 = wp.pi ** 2 / 6


# -- ExtendedReal ------------------------------------------------------------

def test_error_bound_must_be_nonnegative():
    with pytest.raises(ValueError):
        ExtendedReal(1, -1e-30)


@given(st.floats(-1e6, 1e6), st.floats(0, 1e-10), st.floats(-1e6, 1e6), st.floats(0, 1e-10))
def test_addition_error_is_subadditive(x, ex, y, ey):
    a, b = ExtendedReal(x, ex), ExtendedReal(y, ey)
    s = a + b
    assert s.err >= 0
    assert s.err <= ex + ey + ulp_err(s.value) * 1.0000001


def test_pickle_round_trip():
    v = ExtendedReal(wp.pi, 3e-30)
    w = pickle.loads(pickle.dumps(v))
    assert w.value == v.value and w.err == v.err


def test_decimal_rendering_is_stable():
    assert ExtendedReal(wp.mpf(1) / 3).to_decimal(10) == "0.3333333333"


# -- compensated_sum ------------------------------------------------------------

def test_compensated_sum_cancellation():
    out = compensated_sum([1, wp.mpf("1e-20"), -1])
    assert out.value == wp.mpf("1e-20")
    assert out.err < 1e-35


def test_compensated_sum_empty():
    out = compensated_sum([])
    assert out.value == 0 and out.err == 0


def test_compensated_sum_overflow():
    with pytest.raises(OverflowError, match="magnitude overflow"):
        compensated_sum([1, wp.inf])


@pytest.mark.slow
def test_basel_from_a_million_terms():
    N = 10 ** 6
    head = compensated_sum(wp.mpf(1) / (k * k) for k in range(1, N + 1))
    total = head + zeta_tail(2, N)
    assert abs(total.value - PI2_6) < 1e-18


@pytest.mark.slow
def test_compensated_sum_is_order_independent():
    rng = random.Random(7)
    terms = [wp.mpf(rng.uniform(-1, 1)) * wp.power(10, rng.randint(-30, 30))
             for _ in range(10 ** 5)]
    ref = compensated_sum(terms)
    for _ in range(3):
        rng.shuffle(terms)
        out = compensated_sum(terms)
        assert abs(out.value - ref.value) <= 4 * ulp_err(ref.value)


# -- tails ------------------------------------------------------------------------

@pytest.mark.parametrize("N", [10, 100])
def test_zeta_tail_closes_basel(N):
    head = sum(wp.mpf(1) / (n * n) for n in range(1, N + 1))
    t = zeta_tail(2, N)
    assert abs(head + t.value - PI2_6) <= t.err + 1e-30


def test_zeta_tail_matches_brute_force_reference():
    assert close(zeta_tail(3, 50), ZETA_TAIL_3_50, 1e-15)


@given(st.floats(1.01, 40), st.integers(1, 10 ** 6))
def test_zeta_tail_is_positive(s, N):
    assert zeta_tail(s, N).value > 0


@pytest.mark.parametrize("s", [1, 0.5, -2])
def test_zeta_tail_rejects_divergent(s):
    with pytest.raises(DomainError):
        zeta_tail(s, 10)


def test_log_zeta_tail_reference():
    t = log_zeta_tail(2, 10 ** 4)
    assert t.value > 0
    assert close(t, LOG_ZETA_TAIL_2_1E4, 1e-14)


@pytest.mark.parametrize("N", [100, 1000, 10 ** 5])
def test_log_zeta_tail_below_power_tail(N):
    assert log_zeta_tail(3, N).value < zeta_tail(2.5, N).value


def test_log_zeta_tail_rejects_divergent():
    with pytest.raises(DomainError):
        log_zeta_tail(1, 10)


def test_harmonic_tail_reference():
    t = harmonic_tail(2, 1000)
    assert t.value > 0
    assert close(t, HARMONIC_TAIL_2_1000, 1e-12)


def test_harmonic_tail_is_independent_of_cut():
    totals = []
    for N in (100, 1000):
        h = Fraction(0)
        acc = wp.mpf(0)
        for n in range(1, N + 1):
            h += Fraction(1, n)
            acc += wp.mpf(h.numerator) / h.denominator / wp.power(n, 3)
        totals.append(acc + harmonic_tail(3, N).value)
    assert abs(totals[0] - totals[1]) < 1e-16


def test_harmonic_tail_rejects_divergent():
    with pytest.raises(DomainError):
        harmonic_tail(1, 100)


@pytest.mark.parametrize("name,tail,term", TAIL_OPS, ids=[t[0] for t in TAIL_OPS])
def test_tail_consistency(name, tail, term):
    assert tail_inconsistencies(tail, term) == []


@settings(max_examples=25)
@given(st.floats(1.05, 12), st.integers(2, 300), st.integers(1, 300))
def test_tail_consistency_random(s, N1, gap):
    N2 = N1 + gap
    t1, t2 = zeta_tail(s, N1), zeta_tail(s, N2)
    lhs = direct_sum(lambda n: wp.power(n, -s), N1, N2) + t2.value
    assert abs(lhs - t1.value) <= t1.err + t2.err + 1e-30


# -- sum_series -------------------------------------------------------------------

def test_sum_series_log_ratio_closed_form():
    out = sum_series(ev.e1_4_spec(), 1e-12)
    closed = ev.e1_4_closed()
    assert out.err <= 1e-12
    assert abs(out.value - closed.value) <= out.err + closed.err


def test_sum_series_atanh_closed_form():
    out = sum_series(ev.e1_17_spec(), 1e-12)
    closed = ev.e1_17_closed()
    assert abs(out.value - closed.value) <= out.err + closed.err


def test_single_term_series():
    out = sum_series(SeriesSpec(lambda n: wp.mpf(7) / 3, 3, n_max=3))
    assert out.value == wp.mpf(7) / 3


def test_empty_series_is_exact_zero():
    out = sum_series(SeriesSpec(lambda n: 1, 5, n_max=4))
    assert out.value == 0 and out.err == 0


def test_divergent_tail_basis_rejected():
    model = TailModel(((PowerTail(1), 1),))
    with pytest.raises(ConfigurationError):
        sum_series(SeriesSpec(lambda n: wp.mpf(1) / n, 1, model), 1e-10)


def test_unreachable_eps_rejected():
    with pytest.raises(PrecisionError):
        sum_series(ev.e1_4_spec(), 1e-40)


def test_harmonic_weight_is_harmonic_number():
    # sum H_n / n^3 = pi^4 / 72
    spec = SeriesSpec(lambda n, h: h / wp.power(n, 3), 1,
                      InverseSeries.monomial(3).tail_model("harmonic"), weight="harmonic")
    out = sum_series(spec, 1e-15)
    assert abs(out.value - wp.pi ** 4 / 72) <= out.err


CLOSED_FORMS = [
    (ev.e1_4_spec, ev.e1_4_closed),
    (ev.e1_5_spec, ev.e1_5_closed),
    (ev.e1_17_spec, ev.e1_17_closed),
    (ev.e1_36_spec, ev.e1_36_closed),
]


@pytest.mark.parametrize("spec,closed", CLOSED_FORMS, ids=["E1.4", "E1.5", "E1.17", "E1.36"])
@settings(max_examples=15)
@given(exp=st.floats(6, 14))
def test_error_bound_is_honest(spec, closed, exp):
    eps = 10.0 ** -exp
    out = sum_series(spec(), eps)
    ref = closed()
    assert out.err <= eps
    assert float(abs(out.value - ref.value)) <= out.err + ref.err


# -- extrapolation ------------------------------------------------------------------

def test_extrapolate_basel():
    ns = [2 ** k for k in range(3, 12)]
    partials = [sum(wp.mpf(1) / (n * n) for n in range(1, N + 1)) for N in ns]
    out = extrapolate(partials, "inverse-n", ns)
    assert abs(out.value - PI2_6) < 1e-10


def test_extrapolate_log_over_n_matches_tail_closure():
    spec = ev.e1_10_spec()
    ns = [2 ** k for k in range(4, 15)]
    out = extrapolate(ev.partial_sums(spec, ns), "log-over-n", ns)
    ref = sum_series(spec, 1e-13)
    assert abs(out.value - ref.value) < 1e-8


def test_extrapolate_constant():
    out = extrapolate([wp.mpf(2)] * 7, "inverse-n")
    assert out.value == 2


def test_extrapolate_alternating():
    partials = []
    acc = wp.mpf(0)
    for n in range(1, 40):
        acc += (-1) ** (n + 1) / wp.mpf(n)
        partials.append(acc)
    out = extrapolate(partials, "alternating")
    assert abs(out.value - wp.log(2)) < 1e-10


def test_extrapolate_rejects_non_monotone():
    with pytest.raises(ConvergenceError):
        extrapolate([1, 2, 1.5, 1.7, 1.6, 1.65, 1.62], "inverse-n")


def test_extrapolate_needs_enough_partials():
    with pytest.raises(ConfigurationError):
        extrapolate([1, 1.5, 1.7], "inverse-n")


@pytest.mark.parametrize("item", ev.series_catalog(), ids=lambda c: c.name)
def test_tail_closure_agrees_with_extrapolation(item):
    ns = [2 ** k for k in range(4, 15 if item.model == "log-over-n" else 13)]
    closed = sum_series(item.spec, 1e-13)
    limit = extrapolate(ev.partial_sums(item.spec, ns), item.model, ns)
    assert abs(closed.value - limit.value) <= max(10 * max(closed.err, limit.err), 1e-12)
