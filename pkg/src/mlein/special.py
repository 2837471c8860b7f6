"""Mittag-Leffler functions and the upper incomplete gamma function.

Real arguments only. Every function returns an :class:`~mlein.core.EvalResult`
and raises :class:`~mlein.core.NonConvergent` when its error estimate misses
the requested tolerance.

Evaluation regimes for ``E_{a,b}(z)``:

* a few closed forms (``a`` in {1, 2} with ``b`` in {1, 2});
* the Taylor series in double precision when a rounding-error bound on the
  summation meets the tolerance;
* the optimally truncated algebraic asymptotic series on the negative axis
  when ``R = |z|**(1/a)`` is large and its truncation estimate passes;
* otherwise the Taylor series summed in extended precision, with the
  working precision set from the size of the largest term.
"""

from __future__ import annotations

import cmath
import math
import warnings
from fractions import Fraction
from functools import lru_cache

import mpmath
import numpy as np
from scipy import integrate
from scipy.special import gammaln, gammasgn, rgamma

from .core import (
    DEFAULT_TOL,
    EPS,
    DomainError,
    EvalResult,
    Method,
    NonConvergent,
    Order,
    accept,
    check_real,
)

__all__ = ["gml_series", "ml_one", "ml_two", "ml_neg_power", "gamma_upper"]

# Term cap for the Taylor series, counted in the natural index a*k.
MAX_NATURAL_TERMS = 500
# Below this R the asymptotic series is never tried.
ASYMPTOTIC_MIN_R = 15.0
# Size of the last term, relative to max(1, |sum|), that ends the mp sum.
_STOP = 1e-20


def _term_count(alpha: float, R: float) -> int:
    # R**m / m! < 1e-20 * max term once m >= e*R + 40
    return int(math.ceil((math.e * R + 40.0) / alpha)) + 2


def _term_cap(alpha: float) -> int:
    return int(math.ceil(MAX_NATURAL_TERMS / min(alpha, 1.0)))


def _double_terms(alpha, beta, z, delta, n):
    k = np.arange(n)
    arg = alpha * k + beta
    with np.errstate(over="ignore", under="ignore", invalid="ignore"):
        if z != 0 and n * math.log(abs(z)) > 600:
            logmag = k * math.log(abs(z)) - gammaln(arg)
            terms = np.exp(logmag)
            if z < 0:
                terms[1::2] *= -1.0
        else:
            terms = np.power(z, k) * rgamma(arg)
        if delta is not None:
            terms = terms / (alpha * k + delta)
    return terms, arg


def _series_mp(alpha, beta, z, delta, n, dps, R):
    """Extended-precision Taylor sum.

    Returns (value, abs_err, terms, converged). Uses the Gamma recurrence
    when alpha is a fraction with a small denominator.
    """
    frac = Fraction(alpha)
    period = frac.denominator if frac.denominator <= 64 else 0
    shift = frac.numerator
    with mpmath.workdps(dps):
        a = mpmath.mpf(alpha)
        b = mpmath.mpf(beta)
        zz = mpmath.mpf(z)
        d = mpmath.mpf(delta) if delta is not None else None
        floor = mpmath.mpf(10) ** (-dps)
        total = mpmath.mpf(0)
        absum = mpmath.mpf(0)
        power = mpmath.mpf(1)
        rg = []
        last = mpmath.mpf(0)
        k = 0
        for k in range(2 * n):
            if period and k >= period:
                # 1/Gamma(x + p) = 1/Gamma(x) / (x (x+1) ... (x+p-1))
                x = a * (k - period) + b
                den = x
                for j in range(1, shift):
                    den *= x + j
                r = rg[k - period] / den
            else:
                r = mpmath.rgamma(a * k + b)
            rg.append(r)
            t = power * r
            if d is not None:
                t /= a * k + d
            total += t
            last = abs(t)
            absum += last
            power *= zz
            if alpha * k > R + 1 and last <= _STOP * max(1, abs(total)):
                break
        converged = last <= _STOP * max(1, abs(total))
        err = float(absum * floor * 100) + 2 * float(last) + EPS * abs(float(total))
        return float(total), err, k + 1, converged


def _mp_rgammas(alpha: float, beta: float, n: int) -> list:
    """``1/Gamma(alpha*k + beta)`` for k < n at the current mp precision."""
    frac = Fraction(alpha)
    period = frac.denominator if frac.denominator <= 64 else 0
    a = mpmath.mpf(alpha)
    b = mpmath.mpf(beta)
    out = []
    for k in range(n):
        if period and k >= period:
            x = a * (k - period) + b
            den = x
            for j in range(1, frac.numerator):
                den *= x + j
            out.append(out[k - period] / den)
        else:
            out.append(mpmath.rgamma(a * k + b))
    return out


@lru_cache(maxsize=512)
def _dd_coefficients(alpha: float, beta: float, delta: float | None, n: int):
    """Series coefficients split into high and low doubles (immutable)."""
    with mpmath.workdps(40):
        rg = _mp_rgammas(alpha, beta, n)
        hi, lo = [], []
        for k, r in enumerate(rg):
            c = r if delta is None else r / (mpmath.mpf(alpha) * k + mpmath.mpf(delta))
            h = float(c)
            hi.append(h)
            lo.append(float(c - h))
    return tuple(hi), tuple(lo)


def _horner_dd(hi, lo, z: float, n: int) -> float:
    """Double-double Horner evaluation of ``sum_{k<n} c_k z**k``."""
    split = 134217729.0  # 2**27 + 1
    cz = split * z
    zh = cz - (cz - z)
    zl = z - zh
    ph = hi[n - 1]
    pl = lo[n - 1]
    for k in range(n - 2, -1, -1):
        prod = ph * z
        c = split * ph
        ah = c - (c - ph)
        al = ph - ah
        err = ((ah * zh - prod) + ah * zl + al * zh) + al * zl + pl * z
        s = prod + err
        e = err - (s - prod)
        ch = hi[k]
        t = s + ch
        bb = t - s
        e2 = (s - (t - bb)) + (ch - bb) + e + lo[k]
        ph = t + e2
        pl = e2 - (ph - t)
    return ph + pl


# relative rounding unit of the double-double path, with some slack
_DD_UNIT = 2.0**-100


def gml_series(
    alpha: float,
    beta: float,
    z: float,
    delta: float | None = None,
    tol: float = DEFAULT_TOL,
    scale: float = 1.0,
) -> EvalResult:
    """Sum ``z**k / (Gamma(alpha*k + beta) * (alpha*k + delta))`` over k >= 0.

    With ``delta=None`` the second factor is dropped and the sum is the
    two-parameter Mittag-Leffler function. The integrated series of Ein,
    Ein_nu, Si, Cin, Sin_nu and Cin_nu are all of this shape after a power
    of the argument is pulled out; pass that power as ``scale`` so the
    tolerance applies to the scaled result.
    """
    if z == 0:
        v = float(rgamma(beta))
        if delta is not None:
            v /= delta
        return EvalResult(v, EPS * abs(v), 1, Method.TAYLOR).scaled(scale)
    return _gml_series(alpha, beta, z, delta, tol, abs(scale)).scaled(scale)


def _gml_series(alpha, beta, z, delta, tol, scale):

    R = abs(z) ** (1.0 / alpha)
    n = _term_count(alpha, R)
    cap = _term_cap(alpha)
    if n > cap:
        raise NonConvergent(
            f"series for |z|={abs(z):.6g}, alpha={alpha} needs {n} terms (cap {cap})"
        )

    def budget(v: float) -> float:
        return 0.5 * tol * max(1.0, scale * abs(v)) / scale if scale else math.inf

    terms, arg = _double_terms(alpha, beta, z, delta, n)
    abs_terms = np.abs(terms)
    value = math.fsum(terms)
    if np.all(np.isfinite(terms)):
        # per-term relative error: rgamma, pow, and the rounded gamma argument
        err = EPS * float(np.sum(abs_terms * (4.0 + arg * np.log1p(arg))))
        err += float(abs_terms[-1])
        if err <= budget(value):
            return EvalResult(value, err, n, Method.TAYLOR)
        absum = float(np.sum(abs_terms))
    else:
        absum = math.inf

    if z > 0 and math.isfinite(absum):
        # no cancellation: the double sum is as good as it gets
        return EvalResult(value, err, n, Method.TAYLOR)

    if math.isfinite(absum) and n * _DD_UNIT * absum <= 0.2 * budget(value):
        bucket = -(-n // 64) * 64
        hi, lo = _dd_coefficients(alpha, beta, delta, bucket)
        v = _horner_dd(hi, lo, z, n)
        err = n * _DD_UNIT * absum + float(abs_terms[-1]) + EPS * abs(v)
        return EvalResult(v, err, n, Method.TAYLOR)

    if math.isfinite(absum):
        digits = math.log10(max(absum, 1.0))
    else:
        logmag = np.arange(n) * math.log(abs(z)) - gammaln(arg)
        digits = float(np.max(logmag)) / math.log(10) + math.log10(n)
    dps = int(digits) + 25
    v, err, used, converged = _series_mp(alpha, beta, z, delta, n, dps, R)
    if not converged:
        raise NonConvergent(f"series did not converge within {n} terms")
    return EvalResult(v, err, used, Method.TAYLOR)


def _ml_closed_form(nu: float, mu: float, z: float) -> EvalResult | None:
    if nu == 1.0 and mu == 1.0:
        v = math.exp(z)
    elif nu == 1.0 and mu == 2.0:
        v = math.expm1(z) / z if z != 0 else 1.0
    elif nu == 2.0 and mu == 1.0:
        v = math.cos(math.sqrt(-z)) if z <= 0 else math.cosh(math.sqrt(z))
    elif nu == 2.0 and mu == 2.0:
        if z == 0:
            v = 1.0
        elif z < 0:
            s = math.sqrt(-z)
            v = math.sin(s) / s
        else:
            s = math.sqrt(z)
            v = math.sinh(s) / s
    else:
        return None
    if nu == 1.0:
        # exp(z) carries a relative error of about eps*|z|
        err = 4 * EPS * (1.0 + abs(z)) * abs(v)
    else:
        err = 4 * EPS * (1.0 + math.sqrt(abs(z))) * max(1.0, abs(v))
    return EvalResult(v, err, 0, Method.CLOSED_FORM)


def _ml_asymptotic(alpha: float, beta: float, x: float) -> EvalResult:
    """``E_{alpha,beta}(-x)`` for large x by the optimally truncated series.

    Includes the two exponential contributions when 1 < alpha <= 2. For
    alpha near 1 the exponentially small term switched off across the
    Stokes line is added to the error estimate.
    """
    R = x ** (1.0 / alpha)
    kmax = min(int(3 * R / alpha) + 20, 4000)
    k = np.arange(1, kmax + 1)
    arg = beta - alpha * k
    with np.errstate(over="ignore", under="ignore", invalid="ignore"):
        # poles of Gamma give gammaln = inf and a zero term
        mags = np.exp(-gammaln(arg) - k * math.log(x))
        signs = np.where(mags > 0, gammasgn(arg), 0.0)
    signs = np.where(k % 2 == 1, signs, -signs)
    # |1/Gamma(b - a k)| <= Gamma(a k + 1 - b) / pi; truncate where this
    # envelope is smallest so sporadic zeros at the poles do not stop early
    shifted = alpha * k + 1.0 - beta
    with np.errstate(over="ignore", under="ignore", invalid="ignore"):
        env = np.where(
            shifted > 0,
            np.exp(gammaln(np.maximum(shifted, 1e-300)) - k * math.log(x)) / math.pi,
            0.0,
        )
    env = np.maximum(env, mags)
    stop = int(np.argmin(env))
    n_used = stop + 1
    smallest = float(env[stop])
    used = signs[:n_used] * mags[:n_used]
    value = math.fsum(used)
    if alpha > 1.0:
        w = R * cmath.exp(1j * math.pi / alpha)
        value += (2.0 / alpha) * (w ** (1.0 - beta) * cmath.exp(w)).real
        stokes = 0.0
    elif alpha >= 0.9:
        stokes = (2.0 / alpha) * R ** (1.0 - beta) * math.exp(R * math.cos(math.pi / alpha))
    else:
        stokes = 0.0
    err = 4.0 * smallest + stokes + 8 * EPS * (abs(value) + float(np.sum(np.abs(used))))
    return EvalResult(value, err, n_used, Method.ASYMPTOTIC)


def ml_two(nu: float, mu: float, z: float, tol: float = DEFAULT_TOL) -> EvalResult:
    """Two-parameter Mittag-Leffler function ``E_{nu,mu}(z)`` for real z."""
    Order(nu, mu).require_positive()
    z = check_real(z, "z")
    closed = _ml_closed_form(nu, mu, z)
    if closed is not None:
        return closed
    if z < 0 and nu <= 2.0 and (-z) ** (1.0 / nu) >= ASYMPTOTIC_MIN_R:
        res = _ml_asymptotic(nu, mu, -z)
        if res.abs_err_estimate <= 0.5 * tol * max(1.0, abs(res.value)):
            return res
    return accept(gml_series(nu, mu, z, tol=tol), tol, "ml_two")


def ml_one(nu: float, z: float, tol: float = DEFAULT_TOL) -> EvalResult:
    """One-parameter Mittag-Leffler function ``E_nu(z)``."""
    return ml_two(nu, 1.0, z, tol=tol)


def ml_neg_power(nu: float, t: float, tol: float = DEFAULT_TOL) -> EvalResult:
    """``E_nu(-t**nu)`` for 0 < nu <= 1 and t >= 0.

    Completely monotone in t, so the value is clipped to [0, 1].
    """
    Order(nu).require_unit_interval()
    t = check_real(t, "t")
    if t < 0:
        raise DomainError(f"t must be >= 0, got {t}")
    if t == 0:
        return EvalResult(1.0, 0.0, 1, Method.TAYLOR)
    res = ml_two(nu, 1.0, -(t**nu), tol=tol)
    return EvalResult(
        min(1.0, max(0.0, res.value)), res.abs_err_estimate, res.terms_used, res.method
    )


def gamma_upper(a: float, x: float, tol: float = DEFAULT_TOL) -> EvalResult:
    """Upper incomplete gamma ``Gamma(a, x)`` for real a and x > 0.

    Adaptive quadrature over [x, x + 50*max(1, |a|)] in the variable
    s = log(u), plus the leading term of the tail beyond the cut.
    """
    a = check_real(a, "a")
    x = check_real(x, "x")
    if x <= 0:
        raise DomainError(f"gamma_upper needs x > 0, got {x}")
    upper = x + 50.0 * max(1.0, abs(a))

    def integrand(s: float) -> float:
        return math.exp(a * s - math.exp(s))

    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        value, qerr, info = integrate.quad(
            integrand,
            math.log(x),
            math.log(upper),
            epsabs=0.0,
            epsrel=2e-14,
            limit=200,
            full_output=1,
        )[:3]
    # tail: int_U^inf u^(a-1) e^-u du = U^(a-1) e^-U (1 + (a-1)/U + ...)
    lead = math.exp((a - 1.0) * math.log(upper) - upper)
    ratio = max(0.0, a - 1.0) / upper
    bound = lead / (1.0 - ratio) if ratio < 1 else math.inf
    value += lead
    err = qerr + (bound - lead) + 4 * EPS * abs(value)
    res = EvalResult(value, err, int(info["neval"]), Method.QUADRATURE)
    return accept(res, tol, "gamma_upper")
