import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zetaforge.corpus import evaluators as ev
from zetaforge.errors import ConfigurationError, IntegrabilityError
from zetaforge.numerics import wp
from zetaforge.quad import (IntegralSpec, integrate_finite, integrate_log_oscillatory,
                            integrate_semi_infinite)
from zetaforge.specfun import arccot_series

Z2 = wp.pi ** 2 / 6


def test_unit_integral():
    out = integrate_finite(IntegralSpec(lambda t: 1, ("finite", 0, 1)))
    assert abs(out.value - 1) < 1e-25


def test_log_singularity_at_one_gives_zeta2():
    spec = IntegralSpec(lambda u: -wp.log1p(-u) / u, ("finite", 0, 1), {"log_at_1"})
    out = integrate_finite(spec, 1e-14)
    assert out.err <= 1e-14
    assert abs(out.value - Z2) <= out.err


def test_polylog_integral_k2():
    out = ev.e1_12_integral(2, 1e-13)
    assert abs(out.value - 2 * wp.zeta(3)) < 1e-12
    assert abs(out.value - ev.e1_12_rhs(2).value) < 1e-12


def test_non_integrable_endpoint_detected():
    spec = IntegralSpec(lambda t: 1 / t, ("finite", 0, 1), {"log_at_0"})
    with pytest.raises(IntegrabilityError):
        integrate_finite(spec, 1e-10)


def test_unflagged_singularity_detected():
    spec = IntegralSpec(lambda t: 1 / t, ("finite", 0, 1))
    with pytest.raises(IntegrabilityError):
        integrate_finite(spec, 1e-10)


@pytest.mark.parametrize("k,expected", [(0, wp.pi / 2), (1, wp.pi / 4), (2, None)])
def test_sine_laplace_gives_arccot(k, expected):
    expected = arccot_series(2).value if expected is None else expected
    out = ev.sine_laplace(k, 1e-13)
    assert abs(out.value - expected) < 1e-12


def test_exponential_half_line():
    out = integrate_semi_infinite(IntegralSpec(lambda t: wp.exp(-t), ("semi_infinite", 0)))
    assert abs(out.value - 1) < 1e-20


def test_non_decaying_half_line_detected():
    spec = IntegralSpec(lambda t: 1 / (1 + t), ("semi_infinite", 0))
    with pytest.raises(IntegrabilityError):
        integrate_semi_infinite(spec, 1e-10)


def test_log_oscillatory_matches_harmonic_series():
    a = ev.harmonic_arccot_integral(1e-12)
    b = ev.harmonic_arccot_series(1e-12)
    assert abs(a.value - b.value) < 1e-10


def test_log_oscillatory_zero_weight():
    spec = IntegralSpec(lambda t: 0, ("finite", 0, 1), {"oscillatory_log"})
    assert integrate_log_oscillatory(spec).value == 0


def test_log_oscillatory_half_weight_against_series():
    z = wp.mpf(1) / 2
    assert abs(ev.arccot_weight_integral(z, 1e-12).value - ev.weighted_arccot_sum(z, 1e-13).value) < 1e-10


def test_log_oscillatory_unbounded_weight_detected():
    def f(t):
        L = wp.log(t)
        return wp.sin(L) / (t * L) / t

    spec = IntegralSpec(f, ("finite", 0, 1), {"oscillatory_log"})
    with pytest.raises(IntegrabilityError):
        integrate_log_oscillatory(spec, 1e-10)


@pytest.mark.parametrize("n", [1, 2, 5, 20])
def test_log_moment_integral(n):
    out = ev.e1_27_integral(n, 1e-14)
    assert abs(out.value - wp.log(wp.mpf(n + 1) / n)) < 1e-12


@settings(max_examples=20)
@given(st.floats(-3, 3), st.floats(-3, 3), st.floats(0.1, 4), st.integers(0, 6))
def test_linearity(alpha, beta, c, p):
    alpha, beta, c = wp.mpf(alpha), wp.mpf(beta), wp.mpf(c)
    f = lambda t: wp.exp(-c * t)  # noqa: E731
    g = lambda t: wp.power(t, p) * wp.cos(t)  # noqa: E731
    dom = ("finite", 0, 2)
    F = integrate_finite(IntegralSpec(f, dom), 1e-16)
    G = integrate_finite(IntegralSpec(g, dom), 1e-16)
    H = integrate_finite(IntegralSpec(lambda t: alpha * f(t) + beta * g(t), dom), 1e-16)
    combined = alpha * F.value + beta * G.value
    budget = H.err + abs(alpha) * F.err + abs(beta) * G.err + 1e-28
    assert abs(H.value - combined) <= budget


def test_unknown_flag_rejected():
    with pytest.raises(ConfigurationError):
        IntegralSpec(lambda t: t, ("finite", 0, 1), {"pole_at_0"})


@pytest.mark.parametrize("domain", [("finite", 1, 0), ("finite", 0), ("circle", 0)])
def test_bad_domain_rejected(domain):
    with pytest.raises(ConfigurationError):
        IntegralSpec(lambda t: t, domain)


def test_wrong_entry_point_rejected():
    with pytest.raises(ConfigurationError):
        integrate_finite(IntegralSpec(lambda t: t, ("semi_infinite", 0)))
