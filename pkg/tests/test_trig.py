import math
import warnings

import numpy as np
import pytest
from scipy import integrate, special

import frozen
from mlein import (
    DomainError,
    InvalidOrder,
    NonConvergent,
    ci,
    cin,
    cin_integral_nu,
    cos_frac,
    si_classic,
    si_lower,
    sin_frac,
    sin_integral_nu,
)
from mlein.core import EULER_GAMMA

NUS = (0.25, 0.5, 0.75)


def _quad(f, a, b, **kw):
    v, _ = integrate.quad(f, a, b, epsabs=1e-13, epsrel=1e-13, limit=200, **kw)
    return v


def _oscillatory_tail(x, weight):
    """int_x^inf weight(t)/t dt with weight sin or cos, by QAWF."""
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        v, _ = integrate.quad(lambda t: 1.0 / (t + x), 0, np.inf, weight=weight, wvar=1.0)
    c, s = math.cos(x), math.sin(x)
    # shift t -> t + x: sin(t + x) = sin t cos x + cos t sin x, etc.
    other = "cos" if weight == "sin" else "sin"
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        w, _ = integrate.quad(lambda t: 1.0 / (t + x), 0, np.inf, weight=other, wvar=1.0)
    if weight == "sin":
        return v * c + w * s
    return v * c - w * s


@pytest.mark.parametrize("x", np.concatenate([np.linspace(0.0, 40.0, 41), [40.5, 55.0, 100.0, 1e3, 1e5]]))
def test_si_matches_scipy(x):
    assert si_classic(x).value == pytest.approx(special.sici(x)[0], abs=1e-14)
    assert si_classic(-x).value == -si_classic(x).value


@pytest.mark.parametrize("x", [0.1, 1.0, 5.0, 39.0, 41.0, 100.0, 1e4])
def test_ci_matches_scipy(x):
    assert ci(x).value == pytest.approx(special.sici(x)[1], abs=1e-14)


def test_si_values():
    assert si_classic(0.0).value == 0.0
    assert abs(si_classic(1000.0).value - math.pi / 2) <= 2e-3
    q = _quad(lambda t: math.sin(t) / t if t else 1.0, 0, 1)
    assert abs(si_classic(1.0).value - q) <= 1e-12


def test_si_lower():
    assert si_lower(1.0).value == pytest.approx(si_classic(1.0).value - math.pi / 2, abs=1e-15)
    assert abs(si_lower(1e6).value) < 1e-5
    assert abs(si_lower(5.0).value + _oscillatory_tail(5.0, "sin")) <= 1e-8
    with pytest.raises(DomainError):
        si_lower(-1.0)


def test_cin_values():
    assert cin(0.0).value == 0.0
    q = _quad(lambda t: (1 - math.cos(t)) / t if t else 0.0, 0, 1)
    assert abs(cin(1.0).value - q) <= 1e-12
    assert cin(-3.0).value == cin(3.0).value


@pytest.mark.parametrize("x", np.linspace(0.1, 20.0, 40))
def test_ci_cin_identity(x):
    assert abs(ci(x).value - (-cin(x).value + math.log(x) + EULER_GAMMA)) <= 1e-11


def test_cin_monotone_nonnegative():
    vals = [cin(x).value for x in np.linspace(0.0, 80.0, 801)]
    assert min(vals) >= 0
    assert all(b >= a - 1e-15 for a, b in zip(vals, vals[1:]))


def test_ci_values():
    assert abs(ci(100.0).value) <= 2e-2
    assert ci(1.0).value == pytest.approx(EULER_GAMMA - cin(1.0).value, abs=1e-15)
    assert abs(ci(2.0).value + _oscillatory_tail(2.0, "cos")) <= 1e-8
    with pytest.raises(DomainError):
        ci(0.0)


@pytest.mark.parametrize("x", np.linspace(0.0, 20.0, 41))
def test_frac_unit_order(x):
    assert abs(sin_frac(1.0, x).value - math.sin(x)) <= 1e-12
    assert abs(cos_frac(1.0, x).value - math.cos(x)) <= 1e-12


@pytest.mark.parametrize("nu", NUS)
def test_frac_at_zero(nu):
    assert sin_frac(nu, 0.0).value == 0.0
    assert cos_frac(nu, 0.0).value == 1.0


@pytest.mark.parametrize("args,ref", frozen.SIN_FRAC)
def test_sin_frac_frozen(args, ref):
    assert abs(sin_frac(*args).value - float(ref)) <= 1e-10


@pytest.mark.parametrize("args,ref", frozen.COS_FRAC)
def test_cos_frac_frozen(args, ref):
    assert abs(cos_frac(*args).value - float(ref)) <= 1e-10


def test_cos_frac_half_is_exponential():
    # 2 nu = 1 makes cos_nu(x) = exp(-x)
    for x in (0.5, 5.0, 30.0):
        assert cos_frac(0.5, x).value == pytest.approx(math.exp(-x), rel=1e-12)


def test_frac_invalid_order():
    for f in (sin_frac, cos_frac, sin_integral_nu, cin_integral_nu):
        with pytest.raises(InvalidOrder):
            f(0.0, 1.0)
        with pytest.raises(InvalidOrder):
            f(1.2, 1.0)


def test_frac_small_order_trend():
    xs = np.linspace(2.0, 10.0, 33)
    for x in xs:
        assert abs(sin_frac(0.05, x).value - 0.5) <= 0.15
        assert abs(cos_frac(0.05, x).value - 0.5) <= 0.15


@pytest.mark.parametrize("nu", NUS)
def test_sin_frac_power_law_decay(nu):
    # no sign changes far out: the fractional sine settles into a power-law tail
    xs = np.linspace(30.0, 200.0, 50)
    vals = np.array([sin_frac(nu, x).value for x in xs])
    assert np.all(vals > 0)
    assert np.all(np.diff(vals) < 0)


@pytest.mark.parametrize("x", np.linspace(0.0, 10.0, 21))
def test_integrals_unit_order(x):
    assert abs(sin_integral_nu(1.0, x).value - si_classic(x).value) <= 1e-12
    assert abs(cin_integral_nu(1.0, x).value - cin(x).value) <= 1e-12


@pytest.mark.parametrize("nu", NUS)
def test_integrals_at_zero(nu):
    assert sin_integral_nu(nu, 0.0).value == 0.0
    assert cin_integral_nu(nu, 0.0).value == 0.0


def test_sin_integral_half_by_quadrature():
    q = _quad(lambda t: sin_frac(0.5, t).value / t**0.5 if t else 1 / math.gamma(1.5), 0, 4)
    assert abs(sin_integral_nu(0.5, 4.0).value - q) <= 1e-8


def test_cin_integral_by_quadrature():
    q = _quad(lambda t: (1 - cos_frac(0.75, t).value) / t**0.75 if t else 0.0, 0, 6)
    assert abs(cin_integral_nu(0.75, 6.0).value - q) <= 1e-8


@pytest.mark.parametrize("args,ref", frozen.SIN_INT)
def test_sin_integral_frozen(args, ref):
    assert abs(sin_integral_nu(*args).value - float(ref)) <= 1e-10


@pytest.mark.parametrize("args,ref", frozen.CIN_INT)
def test_cin_integral_frozen(args, ref):
    assert abs(cin_integral_nu(*args).value - float(ref)) <= 1e-10


@pytest.mark.parametrize("nu", NUS)
@pytest.mark.parametrize("x", [45.0, 120.0])
def test_integrals_beyond_series_range(nu, x):
    # continue from x = 30 by quadrature of the defining integrands
    a = 30.0
    s = sin_integral_nu(nu, a).value + _quad(lambda t: sin_frac(nu, t).value / t**nu, a, x)
    c = cin_integral_nu(nu, a).value + _quad(lambda t: (1 - cos_frac(nu, t).value) / t**nu, a, x)
    assert sin_integral_nu(nu, x).value == pytest.approx(s, abs=1e-10)
    assert cin_integral_nu(nu, x).value == pytest.approx(c, abs=1e-10)


def test_fractional_integral_cap():
    with pytest.raises(NonConvergent):
        sin_integral_nu(0.5, 2e4)


@pytest.mark.parametrize("nu", NUS)
@pytest.mark.parametrize("x", [1.3, 4.0, 8.5])
def test_sin_integral_derivative(nu, x):
    h = 1e-3
    d = (sin_integral_nu(nu, x + h).value - sin_integral_nu(nu, x - h).value) / (2 * h)
    assert d == pytest.approx(sin_frac(nu, x).value / x**nu, abs=1e-5)


def test_cin_integral_unit_order_monotone():
    vals = [cin_integral_nu(1.0, x).value for x in np.linspace(0, 30, 301)]
    assert min(vals) >= 0
    assert all(b >= a - 1e-15 for a, b in zip(vals, vals[1:]))
