"""Generalized Becker creep law and its relaxation spectra.

    psi_nu(t)  = Gamma(1 + nu) Ein_nu(t)
    psi'_nu(t) = Gamma(1 + nu) E_{nu,1+nu}(-t**nu),   psi'_nu(0) = 1

The rate of creep is completely monotone, so it has a non-negative
frequency spectrum K_nu(r) with ``psi'(t) = int_0^inf exp(-r t) K(r) dr``
and a time spectrum ``H(tau) = K(1/tau) / tau**2``.

K_nu is evaluated from one of three equivalent forms: a descending power
series (r > 1), an ascending series (r < 1), and between the two a
non-negative integral over [0, 1] with an algebraic endpoint weight.
"""

from __future__ import annotations

import enum
import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy import integrate
from scipy.special import gamma, gammaln

from .core import (
    DEFAULT_TOL,
    EPS,
    DomainError,
    EvalResult,
    Method,
    Order,
    ReducedAccuracy,
    SeriesDivergent,
    accept,
    check_real,
)
from .ein_nu import ein_nu
from .special import ml_two

__all__ = [
    "creep_psi",
    "creep_rate",
    "laplace_psi_series",
    "laplace_rate_series",
    "spectrum_frequency",
    "spectrum_time",
    "spectrum_values",
    "SpectrumKind",
    "SpectrumTable",
    "spectrum_table",
]

# Laplace-domain series need s > 1 + margin.
S_MARGIN = 0.05
# Geometric ratio up to which a spectrum series is used directly.
SERIES_RATIO = 0.9
# Ratios above this are also checked against the integral form.
OVERLAP_RATIO = 0.8
OVERLAP_RTOL = 1e-3
NONNEG_TOL = 1e-9


def creep_psi(nu: float, t: float, tol: float = DEFAULT_TOL) -> EvalResult:
    """Creep function ``Gamma(1 + nu) Ein_nu(t)``; nu = 0 gives t/2."""
    Order(nu).require_unit_interval(allow_zero=True)
    res = ein_nu(nu, t, tol)
    if nu in (0.0, 1.0):
        return res
    return accept(res.scaled(gamma(1.0 + nu)), tol, "creep_psi")


def creep_rate(nu: float, t: float, tol: float = DEFAULT_TOL) -> EvalResult:
    """Rate of creep, normalized to 1 at t = 0."""
    Order(nu).require_unit_interval()
    t = check_real(t, "t")
    if t < 0:
        raise DomainError(f"t must be >= 0, got {t}")
    if t == 0:
        return EvalResult(1.0, 0.0, 0, Method.CLOSED_FORM)
    res = ml_two(nu, 1.0 + nu, -(t**nu), tol=tol)
    if nu == 1.0:
        return res
    return accept(res.scaled(gamma(1.0 + nu)), tol, "creep_rate")


def _cvz_alternating(terms: np.ndarray) -> float:
    """Cohen-Villegas-Zagier sum of ``sum_k (-1)**k terms[k]``.

    Exact for moment sequences of positive measures on [0, 1]; the error
    is at most ``2 * terms[0] / (3 + sqrt(8))**n``.
    """
    n = len(terms)
    d = (3.0 + math.sqrt(8.0)) ** n
    d = (d + 1.0 / d) / 2.0
    b = -1.0
    c = -d
    total = 0.0
    for k in range(n):
        c = b - c
        total += c * terms[k]
        b = (k + n) * (k - n) * b / ((k + 0.5) * (k + 1.0))
    return total / d


_CVZ_TERMS = 32


def _laplace_series(nu: float, s: float, which: str) -> EvalResult:
    Order(nu).require_unit_interval()
    s = check_real(s, "s")
    if s <= 1.0 + S_MARGIN:
        raise SeriesDivergent(f"descending series needs s > {1 + S_MARGIN}, got {s}")
    n = np.arange(1, _CVZ_TERMS + 1)
    beta = n * nu - nu + 1.0
    if which == "psi":
        # Gamma(n nu - nu + 2) / ((n nu - nu + 1) Gamma(1 + n nu)) s**(nu - n nu - 2)
        logs = gammaln(beta + 1.0) - gammaln(1.0 + n * nu) - (beta + 1.0) * math.log(s)
        terms = np.exp(logs) / beta
    else:
        logs = gammaln(beta) - gammaln(1.0 + n * nu) - beta * math.log(s)
        terms = np.exp(logs)
    scale = gamma(1.0 + nu)
    value = scale * _cvz_alternating(terms)
    bound = 2.0 * terms[0] / (3.0 + math.sqrt(8.0)) ** _CVZ_TERMS
    err = scale * (bound + 8 * EPS * terms[0]) + 2 * EPS * abs(value)
    return EvalResult(value, err, _CVZ_TERMS, Method.TAYLOR)


def laplace_psi_series(nu: float, s: float, tol: float = DEFAULT_TOL) -> EvalResult:
    """Laplace transform of the creep function from its descending series in s."""
    return accept(_laplace_series(nu, s, "psi"), tol, "laplace_psi_series")


def laplace_rate_series(nu: float, s: float, tol: float = DEFAULT_TOL) -> EvalResult:
    """Laplace transform of the creep rate from its descending series in s."""
    return accept(_laplace_series(nu, s, "rate"), tol, "laplace_rate_series")


def _sin_pi(x: np.ndarray) -> np.ndarray:
    # sin(pi x), exactly zero at integers
    nearest = np.rint(x)
    sign = np.where(nearest % 2 == 0, 1.0, -1.0)
    return sign * np.sin(np.pi * (x - nearest))


def _series_length(q: float) -> int:
    return int(math.ceil(math.log(1e-18) / math.log(q))) + 2


def _k_descending(nu: float, r: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Descending series in r**-nu; converges for r > 1."""
    q = float(np.max(r ** -nu))
    n = np.arange(1, _series_length(q) + 1)[:, None]
    beta = n * nu - nu + 1.0
    sign = np.where(n % 2 == 1, 1.0, -1.0)
    coef = sign * _sin_pi(beta) * np.exp(gammaln(beta) - gammaln(1.0 + n * nu))
    terms = coef * np.exp(-beta * np.log(r)[None, :])
    pref = gamma(1.0 + nu) / math.pi
    values = pref * terms.sum(axis=0)
    tail = np.abs(terms[-1]) * (r ** -nu) / (1.0 - r ** -nu)
    errs = pref * (8 * EPS * np.abs(terms).sum(axis=0) + tail)
    return values, errs


def _k_ascending(nu: float, r: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Ascending series in r**nu; converges for r < 1."""
    q = float(np.max(r**nu))
    m = np.arange(1, _series_length(q) + 1)[:, None]
    sign = np.where(m % 2 == 1, -1.0, 1.0)
    coef = sign * _sin_pi(m * nu) / math.pi * np.exp(gammaln(m * nu) - gammaln(m * nu + nu))
    logr = np.log(r)[None, :]
    terms = coef * np.exp(((m + 1) * nu - 1.0) * logr)
    lead = np.exp((nu - 1.0) * logr[0] - gammaln(nu))
    pref = gamma(1.0 + nu)
    values = pref * (lead + terms.sum(axis=0))
    tail = np.abs(terms[-1]) * r**nu / (1.0 - r**nu)
    errs = pref * (8 * EPS * (lead + np.abs(terms).sum(axis=0)) + tail)
    return values, errs


def _k_integral(nu: float, r: float) -> tuple[float, float, int]:
    """Integral form, manifestly non-negative::

        K(r) = nu sin(nu pi)/pi r**(nu-1)
               int_0^1 (1-x)**(nu-1) x**nu / (r**2nu + 2 r**nu x**nu cos(nu pi) + x**2nu) dx
    """
    rn = r**nu
    c = math.cos(nu * math.pi)

    def f(x: float) -> float:
        xn = x**nu
        return xn / (rn * rn + 2.0 * rn * xn * c + xn * xn)

    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        val, err, info = integrate.quad(
            f, 0.0, 1.0, weight="alg", wvar=(0.0, nu - 1.0),
            epsabs=0.0, epsrel=1e-13, limit=400, full_output=1,
        )[:3]
    pref = nu * math.sin(nu * math.pi) / math.pi * r ** (nu - 1.0)
    return pref * val, pref * err + 4 * EPS * pref * abs(val), int(info["neval"])


def _k_point(nu: float, r: float) -> EvalResult:
    if nu == 1.0:
        v = 1.0 if r < 1.0 else (0.5 if r == 1.0 else 0.0)
        return EvalResult(v, 0.0, 0, Method.CLOSED_FORM)
    q_desc = r ** -nu
    q_asc = r**nu
    if q_desc <= SERIES_RATIO:
        v, e = _k_descending(nu, np.array([r]))
        res = EvalResult(float(v[0]), float(e[0]), _series_length(q_desc), Method.TAYLOR)
        q = q_desc
    elif q_asc <= SERIES_RATIO:
        v, e = _k_ascending(nu, np.array([r]))
        res = EvalResult(float(v[0]), float(e[0]), _series_length(q_asc), Method.TAYLOR)
        q = q_asc
    else:
        v, e, n = _k_integral(nu, r)
        return EvalResult(v, e, n, Method.QUADRATURE)
    if q > OVERLAP_RATIO:
        v, e, n = _k_integral(nu, r)
        if abs(v - res.value) > OVERLAP_RTOL * max(abs(v), NONNEG_TOL):
            warnings.warn(
                f"spectrum representations disagree at nu={nu}, r={r}: "
                f"series {res.value:.6g}, integral {v:.6g}",
                ReducedAccuracy,
                stacklevel=3,
            )
            return EvalResult(v, e, n, Method.QUADRATURE)
    return res


def spectrum_frequency(nu: float, r: float, tol: float = DEFAULT_TOL) -> EvalResult:
    """Frequency spectrum K_nu(r) of the creep rate.

    For nu = 1 this is the box 1 on (0, 1), 0 on (1, inf), and 1/2 at r = 1.
    """
    Order(nu).require_unit_interval()
    r = check_real(r, "r")
    if r <= 0:
        raise DomainError(f"r must be > 0, got {r}")
    return accept(_k_point(nu, r), tol, "spectrum_frequency")


def spectrum_time(nu: float, tau: float, tol: float = DEFAULT_TOL) -> EvalResult:
    """Time spectrum ``H_nu(tau) = K_nu(1/tau) / tau**2``."""
    Order(nu).require_unit_interval()
    tau = check_real(tau, "tau")
    if tau <= 0:
        raise DomainError(f"tau must be > 0, got {tau}")
    res = _k_point(nu, 1.0 / tau).scaled(1.0 / (tau * tau))
    return accept(res, tol, "spectrum_time")


def spectrum_values(nu: float, r: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """K_nu on an array of r > 0; returns (values, error estimates).

    Vectorized over the series regions. Points between them go through the
    integral form one at a time.
    """
    Order(nu).require_unit_interval()
    r = np.asarray(r, dtype=float)
    if np.any(r <= 0) or not np.all(np.isfinite(r)):
        raise DomainError("r must be finite and > 0")
    values = np.empty_like(r)
    errs = np.zeros_like(r)
    if nu == 1.0:
        values[:] = np.where(r < 1.0, 1.0, np.where(r == 1.0, 0.5, 0.0))
        return values, errs
    desc = r ** -nu <= OVERLAP_RATIO
    asc = r**nu <= OVERLAP_RATIO
    if desc.any():
        values[desc], errs[desc] = _k_descending(nu, r[desc])
    if asc.any():
        values[asc], errs[asc] = _k_ascending(nu, r[asc])
    for i in np.flatnonzero(~(desc | asc)):
        res = _k_point(nu, float(r[i]))
        values[i], errs[i] = res.value, res.abs_err_estimate
    return values, errs


class SpectrumKind(str, enum.Enum):
    FREQUENCY = "Frequency"
    TIME = "Time"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class SpectrumTable:
    """Sampled K_nu(r) (FREQUENCY) or H_nu(tau) (TIME)."""

    kind: SpectrumKind
    nu: float
    points: tuple[tuple[float, float], ...]

    @property
    def abscissae(self) -> np.ndarray:
        return np.array([p[0] for p in self.points])

    @property
    def densities(self) -> np.ndarray:
        return np.array([p[1] for p in self.points])

    @property
    def min_density(self) -> float:
        return float(self.densities.min())

    @property
    def nonnegative(self) -> bool:
        return self.min_density >= -NONNEG_TOL

    def converted(self) -> SpectrumTable:
        """The same samples expressed in the other variable (r <-> 1/r)."""
        x = self.abscissae
        y = self.densities
        other = SpectrumKind.TIME if self.kind is SpectrumKind.FREQUENCY else SpectrumKind.FREQUENCY
        pts = tuple((float(a), float(b)) for a, b in zip(1.0 / x[::-1], (y * x * x)[::-1]))
        return SpectrumTable(other, self.nu, pts)


def spectrum_table(
    nu: float,
    kind: SpectrumKind | str = SpectrumKind.FREQUENCY,
    start: float = 1e-2,
    stop: float = 1e2,
    per_decade: int = 50,
) -> SpectrumTable:
    """Tabulate a spectrum on a log grid with ``per_decade`` points per decade."""
    kind = SpectrumKind(kind)
    if not 0 < start < stop:
        raise DomainError(f"need 0 < start < stop, got {start}, {stop}")
    count = int(round(per_decade * math.log10(stop / start))) + 1
    x = np.geomspace(start, stop, count)
    if kind is SpectrumKind.FREQUENCY:
        y, _ = spectrum_values(nu, x)
    else:
        y, _ = spectrum_values(nu, 1.0 / x)
        y = y / (x * x)
    return SpectrumTable(kind, nu, tuple((float(a), float(b)) for a, b in zip(x, y)))



# log-r quadrature layout for the reconstruction integral
_RECON_R_MIN = 1e-12
_RECON_PANEL = 0.25
_RECON_GL = np.polynomial.legendre.leggauss(20)


def _log_panels(lo: float, hi: float) -> tuple[np.ndarray, np.ndarray]:
    count = max(1, int(math.ceil((hi - lo) / _RECON_PANEL)))
    edges = np.linspace(lo, hi, count + 1)
    x, w = _RECON_GL
    half = 0.5 * np.diff(edges)[:, None]
    mid = 0.5 * (edges[1:] + edges[:-1])[:, None]
    return (mid + half * x).ravel(), (half * w).ravel()


def reconstruct_rate(nu: float, t: np.ndarray) -> np.ndarray:
    """``int_0^inf exp(-r t) K_nu(r) dr`` for each t > 0.

    Composite Gauss-Legendre in log r on [r_min, r_max], split at r = 1
    where the nu = 1 spectrum jumps. Below r_min the two leading terms of
    the small-r expansion of K are integrated exactly; r_min shrinks with
    nu so the first neglected term, of order r_min**(3 nu), stays below 1e-12.
    """
    Order(nu).require_unit_interval()
    t = np.asarray(t, dtype=float)
    if np.any(t <= 0) or not np.all(np.isfinite(t)):
        raise DomainError("reconstruction needs finite t > 0")
    r_max = max(1e4, 60.0 / float(t.min()))
    r_min = _RECON_R_MIN if nu == 1.0 else min(_RECON_R_MIN, 10.0 ** (-4.0 / nu))
    u_lo, w_lo = _log_panels(math.log(r_min), 0.0)
    u_hi, w_hi = _log_panels(0.0, math.log(r_max))
    u = np.concatenate([u_lo, u_hi])
    w = np.concatenate([w_lo, w_hi])
    r = np.exp(u)
    k, _ = spectrum_values(nu, r)
    weights = w * r * k
    body = np.exp(-np.outer(t, r)) @ weights
    if nu == 1.0:
        head = r_min
    else:
        # K(r) ~ nu r^(nu-1) + c1 r^(2nu-1) as r -> 0
        c1 = -gamma(1.0 + nu) / (gamma(1.0 - nu) * gamma(2.0 * nu))
        head = r_min**nu + c1 * r_min ** (2 * nu) / (2 * nu)
    return body + head
