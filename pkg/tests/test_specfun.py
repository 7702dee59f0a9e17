import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles as ref
from oracles import close
from zetaforge.constants import ConstantEntry, ConstantsCache, constants
from zetaforge.corpus import evaluators as ev
from zetaforge.errors import ConfigurationError, DomainError
from zetaforge.numerics import wp
from zetaforge.quad import IntegralSpec, integrate_semi_infinite
from zetaforge.specfun import (arccot_series, constant_oracles, digamma, dirichlet_eta,
                               eta_alternating, harmonic_number, hurwitz_zeta,
                               hurwitz_zeta_deriv, im_log_gamma_one_plus_i, im_log_gamma_unit,
                               log_gamma, polygamma, polylog_int, stieltjes_gamma1,
                               upper_gamma0, zeta, zeta_minus_one)

GAMMA = wp.euler
Z2 = wp.pi ** 2 / 6
Z3 = wp.mpf(ref.ZETA3)


# -- constants -----------------------------------------------------------------------

def test_constants_match_independent_oracles():
    checked = constants().cross_validate(constant_oracles(), digits=25)
    assert all(e.validated for e in checked.entries.values())


def test_oracles_agree_to_25_digits():
    cache = constants()
    for name, oracle in constant_oracles().items():
        v = oracle()
        assert float(abs(v.value - cache[name].value)) < 1e-25, name


def test_constants_cache_is_immutable():
    with pytest.raises(AttributeError):
        constants().foo = 1
    with pytest.raises(TypeError):
        constants().entries["pi"] = None


def test_constants_json_round_trip():
    c = constants()
    assert ConstantsCache.from_json(c.to_json()) == c


def test_constants_reject_short_digits():
    entries = dict(constants().entries)
    entries["pi"] = ConstantEntry("3.14159", "too short")
    with pytest.raises(ConfigurationError):
        ConstantsCache(entries)


def test_constants_require_core_names():
    entries = dict(constants().entries)
    del entries["gamma1"]
    with pytest.raises(ConfigurationError):
        ConstantsCache(entries)


def test_unknown_constant():
    with pytest.raises(KeyError):
        constants()["tau"]


# -- zeta family ------------------------------------------------------------------------

def test_zeta_known_values():
    assert abs(zeta(2).value - Z2) < 1e-30
    assert abs(zeta(4).value - wp.pi ** 4 / 90) < 1e-30
    assert close(zeta(3), ref.ZETA3, 1e-30)


@settings(max_examples=30)
@given(st.floats(1.1, 60))
def test_zeta_error_bound(s):
    assert zeta(s).err <= 1e-25


def test_zeta_minus_one_keeps_relative_accuracy():
    v = zeta_minus_one(80)
    direct = sum(wp.power(n, -80) for n in range(2, 12))
    assert abs(v.value / direct - 1) < 1e-30


@pytest.mark.parametrize("s", [1, 0.5, 0, -3])
def test_zeta_rejects_continuation(s):
    with pytest.raises(DomainError):
        zeta(s)


@pytest.mark.parametrize("s", [2, 3])
def test_hurwitz_at_one_is_riemann(s):
    assert abs(hurwitz_zeta(s, 1).value - zeta(s).value) < 1e-28


def test_hurwitz_at_half():
    # zeta(s, 1/2) = (2^s - 1) zeta(s)
    assert abs(hurwitz_zeta(2, wp.mpf(1) / 2).value - 3 * Z2) < 1e-28


def test_hurwitz_reference():
    assert close(hurwitz_zeta(2.5, wp.mpf("0.3")), ref.HURWITZ_2_5_0_3, 1e-14)


@pytest.mark.parametrize("s,a", [(0.5, 1), (2, 0), (2, -1)])
def test_hurwitz_domain(s, a):
    with pytest.raises(DomainError):
        hurwitz_zeta(s, a)


def test_hurwitz_derivative_reference():
    assert close(hurwitz_zeta_deriv(2, 1), ref.ZETA_PRIME_2, 1e-25)


@settings(max_examples=100)
@given(st.floats(1.1, 8), st.floats(0.1, 20))
def test_hurwitz_recurrence(s, a):
    s, a = wp.mpf(s), wp.mpf(a)
    diff = hurwitz_zeta(s, a).value - hurwitz_zeta(s, a + 1).value
    assert abs(diff - wp.power(a, -s)) < 1e-20


def test_eta_known_values():
    assert abs(dirichlet_eta(1).value - wp.log(2)) < 1e-20
    assert abs(dirichlet_eta(2).value - Z2 / 2) < 1e-28
    assert close(dirichlet_eta(0.5), ref.ETA_HALF, 1e-12)


@settings(max_examples=20)
@given(st.floats(1.05, 20))
def test_eta_routes_agree(s):
    a, b = dirichlet_eta(s), eta_alternating(s)
    assert abs(a.value - b.value) <= 10 * (a.err + b.err) + 1e-30


@pytest.mark.parametrize("s", [0, -1])
def test_eta_domain(s):
    with pytest.raises(DomainError):
        dirichlet_eta(s)


# -- gamma family -------------------------------------------------------------------------

def test_polygamma_known_values():
    assert abs(polygamma(0, 1).value + GAMMA) < 1e-30
    assert abs(polygamma(1, 1).value - Z2) < 1e-28
    assert abs(polygamma(0, 5).value - (wp.mpf(25) / 12 - GAMMA)) < 1e-30


def test_polygamma_references():
    assert close(polygamma(1, wp.mpf("0.7")), ref.TRIGAMMA_0_7, 1e-25)
    assert close(digamma(wp.mpf("0.125")), ref.DIGAMMA_0_125, 1e-25)
    assert close(polygamma(4, wp.mpf("2.5")), ref.POLYGAMMA_4_2_5, 1e-25)


@pytest.mark.parametrize("j,x", [(0, 0), (1, -0.5), (2, -3)])
def test_polygamma_rejects_poles(j, x):
    with pytest.raises(DomainError):
        polygamma(j, x)


def test_polygamma_rejects_fractional_order():
    with pytest.raises(DomainError):
        polygamma(1.5, 2)


@settings(max_examples=100)
@given(st.floats(0.01, 50))
def test_digamma_recurrence(x):
    x = wp.mpf(x)
    assert abs(digamma(x + 1).value - digamma(x).value - 1 / x) < 1e-20


@settings(max_examples=100)
@given(st.floats(0.05, 50))
def test_trigamma_recurrence(x):
    x = wp.mpf(x)
    assert abs(polygamma(1, x + 1).value - polygamma(1, x).value + 1 / (x * x)) < 1e-20


def test_harmonic_numbers():
    assert harmonic_number(5).value == wp.mpf(137) / 60
    h0 = harmonic_number(0)
    assert h0.value == 0 and h0.err == 0
    assert close(harmonic_number(10 ** 6), ref.H_1E6, 1e-20)


def test_harmonic_number_matches_digamma():
    assert abs(harmonic_number(40).value - (digamma(41).value + GAMMA)) < 1e-28


def test_stieltjes_reference():
    assert close(stieltjes_gamma1(1), ref.GAMMA1, 1e-18)
    assert close(stieltjes_gamma1(wp.mpf(1) / 2), ref.GAMMA1_HALF, 1e-18)
    assert stieltjes_gamma1(1).err <= 1e-18


def test_stieltjes_half_relation():
    l2 = wp.log(2)
    diff = stieltjes_gamma1(1).value - stieltjes_gamma1(wp.mpf(1) / 2).value
    assert abs(diff - (l2 * l2 + 2 * GAMMA * l2)) < 1e-18


@pytest.mark.parametrize("a", [0.5, 1, 2, 3])
def test_stieltjes_shift_law(a):
    a = wp.mpf(a)
    diff = stieltjes_gamma1(a).value - stieltjes_gamma1(a + 1).value
    assert abs(diff - wp.log(a) / a) < 1e-15


def test_stieltjes_domain():
    with pytest.raises(DomainError):
        stieltjes_gamma1(0)


def test_polylog_values():
    assert abs(polylog_int(1, wp.mpf(1) / 2).value - wp.log(2)) < 1e-30
    assert abs(polylog_int(2, 1).value - Z2) < 1e-28
    assert abs(polylog_int(3, -1).value + wp.mpf(3) / 4 * Z3) < 1e-28
    assert close(polylog_int(2, wp.mpf(1) / 2), ref.LI2_HALF, 1e-28)
    assert close(polylog_int(3, -1), ref.LI3_MINUS_1, 1e-28)


@pytest.mark.parametrize("k,t", [(2, 1.5), (1, 1), (0, 0.5)])
def test_polylog_domain(k, t):
    with pytest.raises(DomainError):
        polylog_int(k, t)


def test_upper_gamma0():
    assert close(upper_gamma0(1), ref.E1_OF_1, 1e-25)
    spec = IntegralSpec(lambda u: wp.exp(-u) / u, ("semi_infinite", 1))
    q = integrate_semi_infinite(spec, 1e-15)
    assert abs(upper_gamma0(1).value - q.value) < 1e-14
    x = wp.mpf("1e-6")
    assert abs(upper_gamma0(x).value + wp.log(x) + GAMMA) < 2e-6
    assert upper_gamma0(1).value > upper_gamma0(2).value


def test_upper_gamma0_domain():
    with pytest.raises(DomainError):
        upper_gamma0(0)


def test_log_gamma():
    assert abs(log_gamma(1).value) < 1e-30
    assert abs(log_gamma(wp.mpf(1) / 2).value - wp.log(wp.sqrt(wp.pi))) < 1e-30
    x = wp.mpf("3.7")
    assert close(log_gamma(x), ref.LOG_GAMMA_3_7, 1e-25)
    rec = wp.log(wp.mpf("2.7")) + wp.log(wp.mpf("1.7")) + log_gamma(wp.mpf("1.7")).value
    assert abs(log_gamma(x).value - rec) < 1e-18


def test_log_gamma_domain():
    with pytest.raises(DomainError):
        log_gamma(-1)


def test_im_log_gamma_one_plus_i():
    v = im_log_gamma_one_plus_i()
    assert close(v, ref.IM_LOG_GAMMA_1_PLUS_I, 1e-25)
    # -gamma + sum_{m>=1} (-1)^(m+1) zeta(2m+1)/(2m+1), with the 1's summed to 1 - pi/4
    series = 1 - ev.const("gamma") - ev.const("pi") / 4 - ev.e1_41_rsum(1e-16)
    assert abs(v.value - series.value) < 1e-15
    assert abs(im_log_gamma_unit(-1).value + v.value) < 1e-30


def test_arccot():
    assert abs(arccot_series(1).value - wp.pi / 4) < 1e-25
    assert close(arccot_series(2), ref.ATAN_HALF, 1e-20)
    assert abs(arccot_series(100).value - (wp.mpf("0.01") - wp.mpf("0.01") ** 3 / 3)) < 1e-10


def test_arccot_domain():
    with pytest.raises(DomainError):
        arccot_series(wp.mpf("0.5"))
