"""Exponential integrals Ein, E1, Ei and E_nu on the real axis.

Ein is the entire function ``Ein(z) = int_0^z (1 - exp(-u)) / u du``;
everything else is expressed through it or through an asymptotic series:

    E1(x) = -C - log(x) + Ein(x)          x > 0
    Ei(x) =  C + log(x) - Ein(-x)         x > 0
    Ei(x) = -E1(-x)                       x < 0

with C the Euler-Mascheroni constant.
"""

from __future__ import annotations

import cmath
import math

import mpmath

from .core import (
    DEFAULT_TOL,
    EPS,
    EULER_GAMMA,
    CutViolation,
    DomainError,
    EvalResult,
    Method,
    NonConvergent,
    accept,
    check_real,
)
from .special import gamma_upper, gml_series

__all__ = ["ein", "e1", "ei", "e_nu", "laplace_phi", "laplace_psi"]

# Above this the asymptotic series are accurate to full double precision.
ASYMPTOTIC_X = 40.0
COMPLEX_MAX_ABS = 100.0


def _asym_series(x: float, sign: float) -> tuple[float, float, int]:
    """Optimally truncated ``sum_k sign**k k! / x**k``; returns (sum, err, terms)."""
    total = 1.0
    term = 1.0
    k = 1
    while True:
        nxt = term * k / x
        if nxt >= term:
            break
        term = nxt
        total += sign**k * term
        k += 1
    return total, term + 4 * EPS * k * total, k


def _e1_asymptotic(x: float) -> EvalResult:
    s, err, n = _asym_series(x, -1.0)
    scale = math.exp(-x) / x
    return EvalResult(scale * s, scale * err, n, Method.ASYMPTOTIC)


def _ei_asymptotic(x: float) -> EvalResult:
    if x > 700.0:
        raise DomainError(f"Ei({x}) overflows double precision")
    s, err, n = _asym_series(x, 1.0)
    scale = math.exp(x) / x
    return EvalResult(scale * s, scale * err, n, Method.ASYMPTOTIC)


def _e1_continued_fraction(x: float) -> EvalResult:
    # modified Lentz on e^x E1(x) = 1/(x+1- 1/(x+3- 4/(x+5- ...)))
    tiny = 1e-300
    b = x + 1.0
    c = 1.0 / tiny
    d = 1.0 / b
    h = d
    i = 1
    for i in range(1, 10_000):
        an = -float(i * i)
        b += 2.0
        d = 1.0 / (an * d + b)
        c = b + an / c
        step = c * d
        h *= step
        if abs(step - 1.0) <= EPS:
            break
    else:
        raise NonConvergent(f"E1 continued fraction at x={x}")
    value = h * math.exp(-x)
    return EvalResult(value, 4 * EPS * i * value, i, Method.TAYLOR)


def _ein_real(x: float, tol: float) -> EvalResult:
    if x == 0:
        return EvalResult(0.0, 0.0, 0, Method.TAYLOR)
    if x > ASYMPTOTIC_X:
        tail = _e1_asymptotic(x)
        return tail.scaled(1.0, EULER_GAMMA + math.log(x))
    if x < -ASYMPTOTIC_X:
        big = _ei_asymptotic(-x)
        return big.scaled(-1.0, EULER_GAMMA + math.log(-x))
    # Ein(x) = x * sum (-x)^k / ((k+1) (k+1)!)
    return gml_series(1.0, 2.0, -x, delta=1.0, tol=tol, scale=x)


def _ein_complex(z: complex, tol: float) -> EvalResult:
    r = abs(z)
    if r > COMPLEX_MAX_ABS:
        raise NonConvergent(f"complex Ein series not supported for |z| > {COMPLEX_MAX_ABS}")
    dps = 25 + int(r / math.log(10))
    cap = int(math.e * r) + 60
    with mpmath.workdps(dps):
        zz = mpmath.mpc(z.real, z.imag)
        term = mpmath.mpc(-1)
        total = mpmath.mpc(0)
        n = 1
        for n in range(1, cap + 1):
            term *= -zz / n
            total += term / n
            if n > r and abs(term) < mpmath.mpf(10) ** (-dps + 5):
                break
        value = complex(total)
        err = 4 * EPS * max(1.0, abs(value))
    return EvalResult(value, err, n, Method.TAYLOR)


def ein(z: float | complex, tol: float = DEFAULT_TOL) -> EvalResult:
    """Ein(z) = sum_{n>=1} (-1)**(n-1) z**n / (n n!).

    Real input gives a real result; complex input is summed in extended
    precision and limited to |z| <= 100.
    """
    if isinstance(z, complex):
        if not (math.isfinite(z.real) and math.isfinite(z.imag)):
            raise DomainError(f"z must be finite, got {z}")
        if z.imag != 0:
            return accept(_ein_complex(z, tol), tol, "ein")
        z = z.real
    x = check_real(z, "z")
    return accept(_ein_real(x, tol), tol, "ein")


def e1(x: float, tol: float = DEFAULT_TOL) -> EvalResult:
    """Exponential integral E1(x) = Gamma(0, x) for x > 0."""
    x = check_real(x)
    if x <= 0:
        raise DomainError(f"e1 needs x > 0, got {x}")
    if x > ASYMPTOTIC_X:
        res = _e1_asymptotic(x)
    elif x > 1.0:
        # the subtraction -C - log x + Ein(x) loses relative accuracy here
        res = _e1_continued_fraction(x)
    else:
        res = _ein_real(x, tol).scaled(1.0, -EULER_GAMMA - math.log(x))
    return accept(res, tol, "e1")


def ei(x: float, tol: float = DEFAULT_TOL) -> EvalResult:
    """Exponential integral Ei(x), principal value for x > 0."""
    x = check_real(x)
    if x == 0:
        raise DomainError("ei is singular at x = 0")
    if x < 0:
        return e1(-x, tol).scaled(-1.0)
    if x > ASYMPTOTIC_X:
        res = _ei_asymptotic(x)
    else:
        res = _ein_real(-x, tol).scaled(-1.0, EULER_GAMMA + math.log(x))
    return accept(res, tol, "ei")


def e_nu(nu: float, x: float, tol: float = DEFAULT_TOL) -> EvalResult:
    """Generalized exponential integral ``int_1^inf exp(-x t) t**(-nu) dt``."""
    nu = check_real(nu, "nu")
    x = check_real(x)
    if x <= 0:
        raise DomainError(f"e_nu needs x > 0, got {x}")
    if nu == 1.0:
        return e1(x, tol)
    if nu == 0.0:
        v = math.exp(-x) / x
        return EvalResult(v, 2 * EPS * v, 0, Method.CLOSED_FORM)
    g = gamma_upper(1.0 - nu, x, tol)
    return accept(g.scaled(x ** (nu - 1.0)), tol, "e_nu")


def _check_cut(s: complex) -> None:
    if s.imag == 0 and s.real <= 0:
        raise CutViolation(f"s = {s} lies on the closed negative real axis")
    if not (math.isfinite(s.real) and math.isfinite(s.imag)):
        raise DomainError(f"s must be finite, got {s}")


def _log1p_over(w: complex, s: complex) -> complex:
    # log(1 + w) / s with the principal branch, accurate for small |w|
    if abs(w) < 1e-4:
        return (w - w * w / 2 + w**3 / 3 - w**4 / 4) / s
    return cmath.log(1 + w) / s


def laplace_phi(s: float | complex) -> float | complex:
    """Laplace transform of E1(t): ``log(1 + s) / s``."""
    real_in = not isinstance(s, complex)
    s = complex(s)
    _check_cut(s)
    if real_in:
        return math.log1p(s.real) / s.real
    return _log1p_over(s, s)


def laplace_psi(s: float | complex) -> float | complex:
    """Laplace transform of Ein(t): ``log(1 + 1/s) / s``."""
    real_in = not isinstance(s, complex)
    s = complex(s)
    _check_cut(s)
    if real_in:
        return math.log1p(1.0 / s.real) / s.real
    return _log1p_over(1 / s, s)
