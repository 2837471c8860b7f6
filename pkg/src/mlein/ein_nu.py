"""The generalized entire function Ein_nu(t) on the real half line.

    Ein_nu(t) = int_0^t (1 - E_nu(-u**nu)) / u**nu du
              = sum_{n>=1} (-1)**(n-1) t**(nu n - nu + 1) / ((nu n - nu + 1) Gamma(nu n + 1))

At nu = 0 the integrand is the Grandi sum 1 - 1 + 1 - ... and the function
is the regularized line t/2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.special import rgamma

from .core import (
    DEFAULT_TOL,
    EPS,
    DomainError,
    EvalResult,
    Method,
    Order,
    accept,
    check_real,
)
from .expint import ein
from .special import _ml_asymptotic, gml_series, ml_two

__all__ = ["EinSeriesTerm", "ein_nu", "ein_nu_integrand", "series_terms"]

# Candidate hand-over points from the power series to the integrated
# asymptotic expansion, tried in order.
SWITCH_POINTS = (20.0, 30.0, 40.0, 60.0)


@dataclass(frozen=True)
class EinSeriesTerm:
    """Term n >= 1 of the Ein_nu power series: ``coefficient * t**exponent``."""

    n: int
    nu: float

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"series index starts at 1, got {self.n}")
        Order(self.nu).require_unit_interval()

    @property
    def exponent(self) -> float:
        return self.nu * self.n - self.nu + 1.0

    @property
    def coefficient(self) -> float:
        sign = 1.0 if self.n % 2 == 1 else -1.0
        return sign * float(rgamma(self.n * self.nu + 1.0)) / self.exponent

    def __call__(self, t: float) -> float:
        return self.coefficient * t**self.exponent


def series_terms(nu: float, count: int) -> list[EinSeriesTerm]:
    return [EinSeriesTerm(n, nu) for n in range(1, count + 1)]


def ein_nu_integrand(nu: float, u: float, tol: float = DEFAULT_TOL) -> EvalResult:
    """``(1 - E_nu(-u**nu)) / u**nu``, equal to ``E_{nu,1+nu}(-u**nu)``.

    The second form has no cancellation near u = 0, where the value is
    ``1 / Gamma(1 + nu)``.
    """
    Order(nu).require_unit_interval()
    u = check_real(u, "u")
    if u < 0:
        raise DomainError(f"u must be >= 0, got {u}")
    return ml_two(nu, 1.0 + nu, -(u**nu), tol=tol)


def _antiderivative(nu: float, u: float, count: int) -> float:
    """Antiderivative of the large-u expansion of the integrand.

    Uses ``1 - E_nu(-x) ~ 1 - sum_{k>=1} (-1)**(k+1) x**(-k) / Gamma(1 - nu k)``.
    """
    parts = [u ** (1.0 - nu) / (1.0 - nu)]
    for k in range(1, count + 1):
        c = float(rgamma(1.0 - nu * k))
        if c == 0.0:
            continue
        p = 1.0 - nu * (k + 1)
        g = math.log(u) if abs(p) < 1e-12 else u**p / p
        parts.append((-1.0 if k % 2 == 1 else 1.0) * c * g)
    return math.fsum(parts)


def _switch_point(nu: float, tol: float) -> tuple[float, EvalResult] | None:
    for T in SWITCH_POINTS:
        asym = _ml_asymptotic(nu, 1.0, T**nu)
        if asym.abs_err_estimate <= 0.1 * tol:
            return T, asym
    return None


def ein_nu(nu: float, t: float, tol: float = DEFAULT_TOL) -> EvalResult:
    """Ein_nu(t) for 0 <= nu <= 1 and t >= 0.

    nu = 1 is Ein itself and nu = 0 returns t/2 tagged ``Regularized``.
    For large t the series value at a switch point T is continued with the
    integrated asymptotic expansion of the integrand.
    """
    order = Order(nu).require_unit_interval(allow_zero=True)
    t = check_real(t, "t")
    if t < 0:
        raise DomainError(f"t must be >= 0, got {t}")
    if order.nu == 0.0:
        return EvalResult(t / 2.0, 0.0, 0, Method.REGULARIZED)
    if nu == 1.0:
        return ein(t, tol)
    if t == 0.0:
        return EvalResult(0.0, 0.0, 0, Method.TAYLOR)

    switch = _switch_point(nu, tol) if t > SWITCH_POINTS[0] else None
    if switch is None or t <= switch[0]:
        res = gml_series(nu, nu + 1.0, -(t**nu), delta=1.0, tol=tol, scale=t)
        return accept(res, tol, "ein_nu")

    T, asym = switch
    base = gml_series(nu, nu + 1.0, -(T**nu), delta=1.0, tol=tol, scale=T)
    count = asym.terms_used
    value = base.value + _antiderivative(nu, t, count) - _antiderivative(nu, T, count)
    # the integrand remainder decays like exp(-u) beyond T
    err = base.abs_err_estimate + 2.0 * asym.abs_err_estimate + 8 * EPS * abs(value)
    res = EvalResult(value, err, base.terms_used + count, Method.ASYMPTOTIC)
    return accept(res, tol, "ein_nu")

