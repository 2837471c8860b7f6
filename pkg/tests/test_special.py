import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st
from scipy import integrate, special

import frozen
from mlein import (
    DomainError,
    EvalResult,
    InvalidOrder,
    Method,
    gamma_upper,
    gml_series,
    ml_neg_power,
    ml_one,
    ml_two,
)
from mlein.core import Order, accept, NonConvergent


def test_method_names():
    assert [str(m) for m in Method] == [
        "TaylorSeries", "AsymptoticExpansion", "Quadrature", "ClosedForm", "Regularized",
    ]


def test_eval_result_scaling():
    r = EvalResult(2.0, 1e-15, 7, Method.TAYLOR).scaled(-3.0, 1.0)
    assert r.value == -5.0
    assert r.abs_err_estimate >= 3e-15
    assert r.terms_used == 7
    assert float(r) == -5.0


def test_order_validation():
    assert Order(0.5).mu == 1.0
    with pytest.raises(InvalidOrder):
        Order(-0.1)
    with pytest.raises(InvalidOrder):
        Order(0.5, 0.0)
    with pytest.raises(InvalidOrder):
        Order(0.0).require_positive()
    Order(0.0).require_unit_interval(allow_zero=True)
    with pytest.raises(InvalidOrder):
        Order(1.5).require_unit_interval()


def test_accept_rejects_loose_results():
    with pytest.raises(NonConvergent):
        accept(EvalResult(1.0, 1e-3, 1, Method.TAYLOR), 1e-12, "x")


@pytest.mark.parametrize("x", np.linspace(-20.0, 5.0, 51))
def test_ml_one_unit_order_is_exp(x):
    assert abs(ml_one(1.0, x).value - math.exp(x)) <= 1e-13 * max(1.0, math.exp(x))


def test_ml_at_zero():
    assert ml_one(1.0, 0.0).value == 1.0
    assert ml_two(2.0, 1.0, 0.0).value == 1.0
    assert ml_two(0.5, 2.5, 0.0).value == pytest.approx(1 / math.gamma(2.5), rel=1e-15)


@pytest.mark.parametrize("x", [0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 26.0])
def test_ml_half_is_scaled_erfc(x):
    assert ml_one(0.5, -x).value == pytest.approx(special.erfcx(x), rel=1e-12)


@pytest.mark.parametrize("x", [0.5, 3.0, 10.0, 30.0])
def test_ml_two_is_cos(x):
    assert abs(ml_one(2.0, -x * x).value - math.cos(x)) <= 1e-12


def test_ml_half_at_minus_two_by_quadrature():
    # E_{1/2}(-x) = 2/sqrt(pi) int_0^inf exp(-u^2 - 2 x u) du
    q, _ = integrate.quad(lambda u: math.exp(-u * u - 4 * u), 0, np.inf, epsabs=1e-15)
    assert abs(ml_one(0.5, -2.0).value - 2 / math.sqrt(math.pi) * q) <= 1e-10


@pytest.mark.parametrize("args,ref", frozen.ML)
def test_ml_against_extended_precision(args, ref):
    a, b, z = args
    r = ml_two(a, b, z)
    ref = float(ref)
    assert abs(r.value - ref) <= 1e-12 * max(1.0, abs(ref))
    assert r.abs_err_estimate <= 1e-12 * max(1.0, abs(ref))


@pytest.mark.parametrize("nu", [0.3, 0.5, 0.8, 1.0, 1.7])
@pytest.mark.parametrize("z", [-7.0, -0.4, 0.9, 3.0])
def test_two_parameter_consistency(nu, z):
    a, b = ml_two(nu, 1.0, z).value, ml_one(nu, z).value
    assert abs(a - b) <= 1e-14 * max(1.0, abs(b))


def test_ml_invalid_order():
    with pytest.raises(InvalidOrder):
        ml_one(0.0, 1.0)
    with pytest.raises(InvalidOrder):
        ml_two(0.5, -1.0, 1.0)


def test_ml_neg_power_examples():
    for t in (0.0, 0.5, 3.0, 30.0):
        assert ml_neg_power(1.0, t).value == pytest.approx(math.exp(-t), rel=1e-13, abs=1e-300)
    assert ml_neg_power(0.5, 0.0).value == 1.0
    with pytest.raises(InvalidOrder):
        ml_neg_power(1.5, 1.0)


def test_ml_neg_power_large_t_leading_terms():
    # three terms of the algebraic expansion sum_k (-1)^(k+1) x^-k / Gamma(1 - k nu), x = t^nu
    nu, t = 0.25, 100.0
    x = t**nu
    ref = sum((-1) ** (k + 1) * x**-k * mp.rgamma(1 - k * nu) for k in (1, 2, 3))
    assert ml_neg_power(nu, t).value == pytest.approx(float(ref), rel=1e-2)


@settings(max_examples=40, deadline=None)
@given(st.floats(0.05, 1.0), st.lists(st.floats(0.0, 200.0), min_size=2, max_size=8))
def test_ml_neg_power_is_bounded_and_decreasing(nu, ts):
    ts = sorted(ts)
    vals = [ml_neg_power(nu, t).value for t in ts]
    assert all(0.0 <= v <= 1.0 for v in vals)
    assert all(b <= a + 1e-14 for a, b in zip(vals, vals[1:]))


@settings(max_examples=40, deadline=None)
@given(st.floats(0.1, 2.0), st.floats(0.5, 2.5), st.floats(-40.0, 2.0))
def test_ml_against_live_series_oracle(alpha, beta, z):
    from oracles import ml as ml_ref

    # keep the brute-force series affordable
    assume(abs(z) ** (1 / alpha) <= 250)
    ref = float(ml_ref(alpha, beta, z))
    r = ml_two(alpha, beta, z)
    assert abs(r.value - ref) <= 2e-12 * max(1.0, abs(ref))


@settings(max_examples=8, deadline=None)
@given(st.floats(0.1, 0.95), st.floats(0.0, 1.0), st.floats(1.0, 3.0))
def test_ml_against_live_laplace_oracle(alpha, frac, log_x):
    from oracles import ml_laplace

    beta = 0.5 + frac * (0.5 + alpha)
    z = -(10.0**log_x)
    ref = float(ml_laplace(alpha, beta, z))
    r = ml_two(alpha, beta, z)
    assert abs(r.value - ref) <= 2e-12 * max(1.0, abs(ref))


def test_generic_series_with_shift():
    # sum (-1)^k / (Gamma(k+2)(k+1)) = Ein(1)
    r = gml_series(1.0, 2.0, -1.0, delta=1.0)
    assert r.value == pytest.approx(0.7965995992970531, abs=1e-15)


@pytest.mark.parametrize("x", [0.1, 1.0, 4.0, 30.0])
def test_gamma_upper_unit_is_exp(x):
    assert gamma_upper(1.0, x).value == pytest.approx(math.exp(-x), rel=1e-12)


def test_gamma_upper_zero_is_e1():
    q, _ = integrate.quad(lambda u: math.exp(-u) / u, 1, np.inf, epsabs=0, epsrel=1e-13)
    assert abs(gamma_upper(0.0, 1.0).value - q) <= 1e-12
    assert gamma_upper(0.0, 1.0).value == pytest.approx(special.exp1(1.0), rel=1e-13)


def test_gamma_upper_half_by_quadrature():
    q, _ = integrate.quad(lambda u: u**-0.5 * math.exp(-u), 2, np.inf, epsabs=1e-15, epsrel=1e-14)
    assert abs(gamma_upper(0.5, 2.0).value - q) <= 1e-12


@pytest.mark.parametrize("args,ref", frozen.GAMMA_UPPER)
def test_gamma_upper_frozen(args, ref):
    assert gamma_upper(*args).value == pytest.approx(float(ref), rel=1e-12)


@pytest.mark.parametrize("a", [-1.5, -0.3, 0.0, 0.7, 2.5, 6.0])
@pytest.mark.parametrize("x", [0.2, 1.0, 7.0, 40.0])
def test_gamma_upper_recurrence(a, x):
    lhs = gamma_upper(a + 1, x).value
    rhs = a * gamma_upper(a, x).value + x**a * math.exp(-x)
    assert lhs == pytest.approx(rhs, rel=1e-11)


@pytest.mark.parametrize("a,x", [(0.5, 3.0), (2.0, 0.5), (4.5, 12.0)])
def test_gamma_upper_matches_scipy(a, x):
    assert gamma_upper(a, x).value == pytest.approx(special.gammaincc(a, x) * special.gamma(a), rel=1e-12)


def test_gamma_upper_domain():
    with pytest.raises(DomainError):
        gamma_upper(0.5, 0.0)
