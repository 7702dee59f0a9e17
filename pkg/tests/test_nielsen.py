import pytest

import oracles as ref
from oracles import close
from zetaforge.errors import DomainError
from zetaforge.nielsen import (SbpKind, gamma1_difference_series, hurwitz_deriv_regular_limit,
                               sbp_eval, xi_integral, xi_mean, xi_series)
from zetaforge.numerics import log_zeta_tail, wp
from zetaforge.specfun import (digamma, dirichlet_eta, hurwitz_zeta, hurwitz_zeta_deriv,
                               polygamma, stieltjes_gamma1, zeta)

GAMMA = wp.euler
Z2 = wp.pi ** 2 / 6
half = wp.mpf(1) / 2


def test_kind_arity():
    assert [k.params for k in SbpKind] == [
        ("s",), ("s",), ("s", "a"), ("x",), ("x",), ("j", "x"), ("s", "a")]


def test_zeta_by_parts():
    out = sbp_eval(SbpKind.ZETA, 2)
    assert out.err <= 1e-15
    assert close(out, ref.ZETA3, 1e-12)


def test_digamma_by_parts_at_one():
    assert abs(sbp_eval("digamma_sbp", 1).value + GAMMA) < 1e-15


def test_eta_by_parts():
    assert close(sbp_eval("eta_sbp", wp.mpf("0.25")), ref.ETA_FACTOR_ZETA_1_25, 1e-15)


def test_hurwitz_derivative_by_parts():
    out = sbp_eval("hurwitz_deriv_sbp", 1, 1)
    direct = -log_zeta_tail(2, 1)  # ln 1 = 0, so the n = 1 term vanishes
    assert abs(out.value - direct.value) < 1e-10
    assert close(out, ref.ZETA_PRIME_2, 1e-15)


DIRECT = {
    "zeta_sbp": lambda s: zeta(s + 1),
    "eta_sbp": lambda s: dirichlet_eta(s + 1) if s > 0 else None,
    "hurwitz_sbp": lambda s, a: hurwitz_zeta(s + 1, a),
    "digamma_sbp": digamma,
    "trigamma_sbp": lambda x: polygamma(1, x),
    "polygamma_sbp": polygamma,
    "hurwitz_deriv_sbp": lambda s, a: hurwitz_zeta_deriv(s + 1, a),
}

SAMPLES = {
    "zeta_sbp": [(0.5,), (1,), (2,), (3.5,), (6,)],
    "eta_sbp": [(0.25,), (0.5,), (1,), (2,), (4,)],
    "hurwitz_sbp": [(1, 1), (0.5, 0.5), (2, 3), (1.5, 0.25), (3, 1.75)],
    "digamma_sbp": [(0.125,), (0.5,), (1,), (2.5,), (7,)],
    "trigamma_sbp": [(0.25,), (0.5,), (1,), (2.5,), (4,)],
    "polygamma_sbp": [(2, 0.7), (3, 1), (4, 2.5), (2, 5), (5, 0.5)],
    "hurwitz_deriv_sbp": [(1, 1), (0.5, 0.5), (2, 3), (1.5, 0.25), (3, 2)],
}


def _eta_direct(s):
    # (1 - 2^-s) zeta(s+1) is eta(s+1) up to the factor change
    return zeta(s + 1).value * (1 - wp.power(2, -s))


@pytest.mark.parametrize("kind,params", [(k, p) for k, ps in SAMPLES.items() for p in ps])
def test_representation_equivalence(kind, params):
    params = tuple(wp.mpf(p) if isinstance(p, float) else p for p in params)
    out = sbp_eval(kind, *params)
    if kind == "eta_sbp":
        ref_value, ref_err = _eta_direct(*params), 1e-28
    else:
        d = DIRECT[kind](*params)
        ref_value, ref_err = d.value, d.err
    assert out.err <= 1e-15
    assert abs(out.value - ref_value) <= 10 * (out.err + ref_err)


@pytest.mark.parametrize("kind,params", [
    ("zeta_sbp", (0,)), ("eta_sbp", (-1,)), ("hurwitz_sbp", (1, 0)), ("digamma_sbp", (-2,)),
    ("trigamma_sbp", (0,)), ("polygamma_sbp", (1, 2)), ("polygamma_sbp", (2.5, 2)),
    ("hurwitz_deriv_sbp", (1, -1)), ("zeta_sbp", (1, 2)),
])
def test_by_parts_domain(kind, params):
    with pytest.raises(DomainError):
        sbp_eval(kind, *params)


def test_unknown_kind():
    with pytest.raises(ValueError):
        sbp_eval("gamma_sbp", 1)


# -- xi -----------------------------------------------------------------------------

def _relation(x):
    x = wp.mpf(x)
    return (polygamma(1, x).value - Z2 - (digamma(x).value + GAMMA) ** 2) / 2


def test_xi_special_values():
    assert xi_series(1).value == 0
    assert abs(xi_series(0).value - Z2) < 1e-14
    assert abs(xi_series(half).value - _relation(half)) < 1e-14


@pytest.mark.parametrize("x", ["0.25", "0.5", "1.5", "2", "5"])
def test_xi_reference(x):
    assert close(xi_series(wp.mpf(x)), ref.XI[x], 1e-14)


@pytest.mark.parametrize("x,expected", [
    ("-0.5", "3.45661676125160482480713859982540152"),
    ("-2.5", "2.53533074644615481823056712560284486"),
])
def test_xi_series_left_of_zero(x, expected):
    assert close(xi_series(wp.mpf(x)), expected, 1e-14)


@pytest.mark.parametrize("x", [-1, -3])
def test_xi_poles(x):
    with pytest.raises(DomainError):
        xi_series(x)


@pytest.mark.parametrize("x", [0.25, 0.5, 1, 2, 5])
def test_nielsen_relation(x):
    x = wp.mpf(x)
    lhs = (digamma(x).value + GAMMA) ** 2
    rhs = polygamma(1, x).value - Z2 - 2 * xi_series(x).value
    assert abs(lhs - rhs) < 1e-11


@pytest.mark.parametrize("x", [0.5, 1, 1.5, 2, 5])
def test_xi_routes_agree(x):
    x = wp.mpf(x)
    assert abs(xi_series(x).value - xi_integral(x).value) < 1e-11


def test_xi_integral_values():
    assert abs(xi_integral(1).value) < 1e-20
    assert abs(xi_integral(2).value - xi_series(2).value) < 1e-12
    assert abs(xi_integral(wp.mpf("1e-4"), 1e-10).value - Z2) < 3e-4
    assert close(xi_integral(wp.mpf("1e-4"), 1e-10), ref.XI_1E_4, 1e-9)


@pytest.mark.parametrize("x", [0, -0.5])
def test_xi_integral_domain(x):
    with pytest.raises(DomainError):
        xi_integral(x)


def test_xi_mean_routes():
    m = xi_mean()
    assert close(m.closed, ref.XI_MEAN, 1e-25)
    assert abs(m.series.value - m.closed.value) < 1e-10
    assert abs(m.integral.value - m.closed.value) < 1e-9
    assert set(m.routes) == {"closed", "series", "integral"}
    assert max(m.residuals.values()) < 1e-9


# -- Laurent data -------------------------------------------------------------------------

def test_stieltjes_difference_series_at_half():
    l2 = wp.log(2)
    out = gamma1_difference_series(1, half)
    assert abs(out.value + (l2 * l2 + 2 * GAMMA * l2)) < 1e-12


@pytest.mark.parametrize("a,b", [(2, half), (1, 3), (0.25, 0.75)])
def test_stieltjes_difference_series(a, b):
    a, b = wp.mpf(a), wp.mpf(b)
    out = gamma1_difference_series(a, b)
    direct = stieltjes_gamma1(b).value - stieltjes_gamma1(a).value
    assert abs(out.value - direct) < 1e-12


@pytest.mark.parametrize("a", [1, half])
def test_regular_limit(a):
    out = hurwitz_deriv_regular_limit(a)
    assert abs(out.value - (Z2 - stieltjes_gamma1(a).value)) < 1e-12
