"""Sine and cosine integrals and their fractional generalizations.

Classical: Si, si = Si - pi/2, Cin(x) = int_0^x (1 - cos t)/t dt and
Ci = -Cin + log x + C.

Fractional, of order 0 < nu <= 1:

    sin_nu(x) = x**nu E_{2nu,1+nu}(-x**(2nu))
    cos_nu(x) = E_{2nu,1}(-x**(2nu))
    Sin_nu(x) = int_0^x sin_nu(t) / t**nu dt
    Cin_nu(x) = int_0^x (1 - cos_nu(t)) / t**nu dt

All are evaluated for real x >= 0 by power series up to x = 40. Beyond
that the classical tails are summed panel by panel between consecutive
zeros of sin or cos, and the fractional integrals continue from x = 40 by
adaptive quadrature of their integrands.
"""

from __future__ import annotations

import math
import warnings

import numpy as np
from scipy import integrate

from .core import (
    DEFAULT_TOL,
    EPS,
    EULER_GAMMA,
    DomainError,
    EvalResult,
    Method,
    NonConvergent,
    Order,
    accept,
    check_real,
)
from .special import gml_series, ml_two

__all__ = [
    "si_classic",
    "si_lower",
    "cin",
    "ci",
    "sin_frac",
    "cos_frac",
    "sin_integral_nu",
    "cin_integral_nu",
]

SERIES_MAX_X = 40.0
# Largest x accepted by the fractional integrals (quadrature cost is linear in x).
FRACTIONAL_MAX_X = 1e4

_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(24)
_CVZ_PANELS = 36


def _nonneg(x: float, name: str = "x") -> float:
    x = check_real(x, name)
    if x < 0:
        raise DomainError(f"{name} must be >= 0, got {x}")
    return x


def _oscillatory_tail(x: float, phase: float) -> EvalResult:
    """``int_x^inf sin(t + phase) / t dt`` for x > 0 and phase in {0, pi/2}.

    Integrates up to the next zero of sin(t + phase), then sums the
    alternating panel integrals between zeros. Those panels form a moment
    sequence, so Cohen-Villegas-Zagier acceleration applies.
    """
    k0 = math.floor((x + phase) / math.pi) + 1
    z0 = k0 * math.pi - phase

    def panel(a: float, b: float) -> float:
        t = 0.5 * (b - a) * _GL_NODES + 0.5 * (a + b)
        return 0.5 * (b - a) * float(np.dot(_GL_WEIGHTS, np.sin(t + phase) / t))

    head = panel(x, z0)
    # |panel k| for k = 0, 1, ...; the first has the sign of sin on (z0, z0 + pi)
    mags = np.array(
        [abs(panel(z0 + k * math.pi, z0 + (k + 1) * math.pi)) for k in range(_CVZ_PANELS)]
    )
    sign0 = 1.0 if k0 % 2 == 0 else -1.0
    n = len(mags)
    d = (3.0 + math.sqrt(8.0)) ** n
    d = (d + 1.0 / d) / 2.0
    b, c, acc = -1.0, -d, 0.0
    for k in range(n):
        c = b - c
        acc += c * mags[k]
        b = (k + n) * (k - n) * b / ((k + 0.5) * (k + 1.0))
    value = head + sign0 * acc / d
    err = 2.0 * mags[0] / (3.0 + math.sqrt(8.0)) ** n + 16 * EPS * (abs(head) + mags[0])
    return EvalResult(value, err, n + 1, Method.QUADRATURE)


def si_classic(x: float, tol: float = DEFAULT_TOL) -> EvalResult:
    """Sine integral Si(x); odd in x."""
    x = check_real(x)
    if x < 0:
        return si_classic(-x, tol).scaled(-1.0)
    if x == 0:
        return EvalResult(0.0, 0.0, 0, Method.TAYLOR)
    if x > SERIES_MAX_X:
        res = _oscillatory_tail(x, 0.0).scaled(-1.0, math.pi / 2)
    else:
        # Si(x) = x sum (-x^2)^k / (Gamma(2k+2) (2k+1))
        res = gml_series(2.0, 2.0, -x * x, delta=1.0, tol=tol, scale=x)
    return accept(res, tol, "si_classic")


def si_lower(x: float, tol: float = DEFAULT_TOL) -> EvalResult:
    """si(x) = Si(x) - pi/2 = -int_x^inf sin(t)/t dt."""
    x = _nonneg(x)
    if x > SERIES_MAX_X:
        return accept(_oscillatory_tail(x, 0.0).scaled(-1.0), tol, "si_lower")
    return accept(si_classic(x, tol).scaled(1.0, -math.pi / 2), tol, "si_lower")


def cin(x: float, tol: float = DEFAULT_TOL) -> EvalResult:
    """Modified cosine integral Cin(x) = int_0^x (1 - cos t)/t dt; even in x."""
    x = abs(check_real(x))
    if x == 0:
        return EvalResult(0.0, 0.0, 0, Method.TAYLOR)
    if x > SERIES_MAX_X:
        # Cin = C + log x - Ci, with Ci(x) = -int_x^inf cos(t)/t dt
        res = _oscillatory_tail(x, math.pi / 2).scaled(1.0, EULER_GAMMA + math.log(x))
    else:
        res = gml_series(2.0, 3.0, -x * x, delta=2.0, tol=tol, scale=x * x)
    return accept(res, tol, "cin")


def ci(x: float, tol: float = DEFAULT_TOL) -> EvalResult:
    """Cosine integral Ci(x) = -Cin(x) + log x + C for x > 0."""
    x = check_real(x)
    if x <= 0:
        raise DomainError(f"ci needs x > 0, got {x}")
    if x > SERIES_MAX_X:
        res = _oscillatory_tail(x, math.pi / 2).scaled(-1.0)
    else:
        res = cin(x, tol).scaled(-1.0, math.log(x) + EULER_GAMMA)
    return accept(res, tol, "ci")


def sin_frac(nu: float, x: float, tol: float = DEFAULT_TOL) -> EvalResult:
    """Fractional sine ``x**nu E_{2nu,1+nu}(-x**(2nu))``."""
    Order(nu).require_unit_interval()
    x = _nonneg(x)
    if nu == 1.0:
        v = math.sin(x)
        return EvalResult(v, EPS * (1.0 + x), 0, Method.CLOSED_FORM)
    if x == 0:
        return EvalResult(0.0, 0.0, 0, Method.TAYLOR)
    xn = x**nu
    res = ml_two(2.0 * nu, 1.0 + nu, -(xn * xn), tol=tol / max(1.0, xn))
    return accept(res.scaled(xn), tol, "sin_frac")


def cos_frac(nu: float, x: float, tol: float = DEFAULT_TOL) -> EvalResult:
    """Fractional cosine ``E_{2nu,1}(-x**(2nu))``."""
    Order(nu).require_unit_interval()
    x = _nonneg(x)
    if nu == 1.0:
        v = math.cos(x)
        return EvalResult(v, EPS * (1.0 + x), 0, Method.CLOSED_FORM)
    if x == 0:
        return EvalResult(1.0, 0.0, 0, Method.TAYLOR)
    return ml_two(2.0 * nu, 1.0, -(x ** (2.0 * nu)), tol=tol)


def _continue_by_quadrature(start: EvalResult, integrand, x: float, tol: float) -> EvalResult:
    worst = [0.0]

    def f(t: float) -> float:
        r = integrand(t)
        worst[0] = max(worst[0], r.abs_err_estimate)
        return r.value

    a = SERIES_MAX_X
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        val, qerr = integrate.quad(
            f, a, x, epsabs=0.1 * tol, epsrel=0.1 * tol, limit=int(x - a) + 50
        )
    value = start.value + val
    err = start.abs_err_estimate + qerr + worst[0] * (x - a) + 4 * EPS * abs(value)
    return EvalResult(value, err, start.terms_used, Method.QUADRATURE)


def _check_fractional_x(x: float) -> None:
    if x > FRACTIONAL_MAX_X:
        raise NonConvergent(f"fractional integrals are limited to x <= {FRACTIONAL_MAX_X:g}")


def sin_integral_nu(nu: float, x: float, tol: float = DEFAULT_TOL) -> EvalResult:
    """Generalized sine integral Sin_nu(x); nu = 1 gives Si."""
    Order(nu).require_unit_interval()
    x = _nonneg(x)
    if nu == 1.0:
        return si_classic(x, tol)
    if x == 0:
        return EvalResult(0.0, 0.0, 0, Method.TAYLOR)
    _check_fractional_x(x)
    a = min(x, SERIES_MAX_X)
    # x sum (-x^(2nu))^k / (Gamma(2nu k + nu + 1) (2nu k + 1))
    res = gml_series(2.0 * nu, nu + 1.0, -(a ** (2.0 * nu)), delta=1.0, tol=tol, scale=a)
    if x > a:

        def integrand(t: float) -> EvalResult:
            return ml_two(2.0 * nu, 1.0 + nu, -(t ** (2.0 * nu)), tol=tol)

        res = _continue_by_quadrature(res, integrand, x, tol)
    return accept(res, tol, "sin_integral_nu")


def cin_integral_nu(nu: float, x: float, tol: float = DEFAULT_TOL) -> EvalResult:
    """Generalized cosine integral Cin_nu(x); nu = 1 gives Cin."""
    Order(nu).require_unit_interval()
    x = _nonneg(x)
    if nu == 1.0:
        return cin(x, tol)
    if x == 0:
        return EvalResult(0.0, 0.0, 0, Method.TAYLOR)
    _check_fractional_x(x)
    a = min(x, SERIES_MAX_X)
    # x^(nu+1) sum (-x^(2nu))^k / (Gamma(2nu k + 2nu + 1) (2nu k + nu + 1))
    res = gml_series(
        2.0 * nu, 2.0 * nu + 1.0, -(a ** (2.0 * nu)), delta=nu + 1.0, tol=tol,
        scale=a ** (nu + 1.0),
    )
    if x > a:

        def integrand(t: float) -> EvalResult:
            c = ml_two(2.0 * nu, 1.0, -(t ** (2.0 * nu)), tol=tol)
            return c.scaled(-(t**-nu), t**-nu)

        res = _continue_by_quadrature(res, integrand, x, tol)
    return accept(res, tol, "cin_integral_nu")
