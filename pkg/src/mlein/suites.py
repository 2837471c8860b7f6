"""Named verification suites run by ``mlein verify``."""

from __future__ import annotations

import math
from collections.abc import Callable
from dataclasses import dataclass

import numpy as np
from scipy import special

from .becker import (
    SpectrumKind,
    creep_psi,
    creep_rate,
    spectrum_table,
    spectrum_time,
    spectrum_values,
)
from .cm import Grid, check_bernstein, check_cm, check_reconstruction
from .core import EULER_GAMMA
from .ein_nu import ein_nu
from .expint import e1, ein
from .special import ml_one
from .trig import cin, cin_integral_nu, cos_frac, si_classic, sin_frac, sin_integral_nu

__all__ = ["CheckResult", "SUITES", "run_suite"]

CM_NUS = (0.25, 0.5, 0.75, 1.0)
FRACTIONAL_NUS = (0.25, 0.5, 0.75)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str

    def line(self, suite: str) -> str:
        return f"CHECK {suite}/{self.name} {'PASS' if self.passed else 'FAIL'} {self.detail}"


def _cm_grid() -> Grid:
    return Grid.log(1e-2, 1e2, 41)


def suite_cm() -> list[CheckResult]:
    out = []
    for nu in CM_NUS:
        rep = check_cm(lambda t, nu=nu: creep_rate(nu, t), _cm_grid(), 8, f"creep_rate[nu={nu:g}]")
        out.append(CheckResult(rep.function_id, rep.passed, f"violations={len(rep.violations)}"))
    rep = check_cm(lambda t: -math.expm1(-t) / t, _cm_grid(), 8, "becker_rate")
    out.append(CheckResult(rep.function_id, rep.passed, f"violations={len(rep.violations)}"))
    return out


def suite_bernstein() -> list[CheckResult]:
    out = []
    for nu in CM_NUS:
        rep = check_bernstein(
            lambda t, nu=nu: creep_psi(nu, t), _cm_grid(), 8, f"creep_psi[nu={nu:g}]"
        )
        out.append(CheckResult(rep.function_id, rep.passed, f"violations={len(rep.violations)}"))
    rep = check_bernstein(lambda t: ein(t), _cm_grid(), 8, "ein")
    out.append(CheckResult(rep.function_id, rep.passed, f"violations={len(rep.violations)}"))
    return out


def suite_spectra() -> list[CheckResult]:
    out = []
    r = np.geomspace(1e-2, 1e2, 200)
    for nu in FRACTIONAL_NUS:
        k, _ = spectrum_values(nu, r)
        low = float(k.min())
        out.append(CheckResult(f"nonnegative[nu={nu:g}]", low >= -1e-9, f"min={low:.3e}"))
        # scalar time-spectrum path against the converted frequency table
        table = spectrum_table(nu, SpectrumKind.FREQUENCY, 1e-2, 1e2, 50).converted()
        h = np.array([spectrum_time(nu, tau).value for tau in table.abscissae])
        dev = float(np.max(np.abs(h - table.densities)))
        out.append(CheckResult(f"time_frequency[nu={nu:g}]", dev <= 1e-9, f"max_dev={dev:.3e}"))
        rr = np.geomspace(1e2, 1e4, 21)
        kk, _ = spectrum_values(nu, rr)
        slope = float(np.polyfit(np.log(rr), np.log(kk), 1)[0])
        target = -(1.0 + nu)
        ok = abs(slope - target) <= 0.05 * abs(target)
        out.append(CheckResult(f"tail_slope[nu={nu:g}]", ok, f"slope={slope:.4f} target={target:g}"))
    return out


def suite_reconstruction() -> list[CheckResult]:
    out = []
    grid = Grid.log(0.1, 10.0, 25)
    for nu, rtol in ((0.25, 1e-3), (0.5, 1e-3), (0.75, 1e-3), (1.0, 1e-9)):
        rep = check_reconstruction(nu, grid, rtol)
        out.append(CheckResult(rep.function_id, rep.passed, f"max_rel={rep.max_deviation:.3e} rtol={rtol:g}"))
    return out


def _max_dev(xs: np.ndarray, f: Callable[[float], float], g: Callable[[float], float]) -> float:
    return max(abs(f(float(x)) - g(float(x))) for x in xs)


def suite_reductions() -> list[CheckResult]:
    xs = np.linspace(0.0, 10.0, 201)
    pos = xs[1:]

    def becker_rate(t: float) -> float:
        return 1.0 if t == 0 else -math.expm1(-t) / t

    def ein_ref(t: float) -> float:
        # E1 + C + log t, with a short series where that sum cancels
        if t < 0.5:
            return sum((-1) ** (k + 1) * t**k / (k * math.factorial(k)) for k in range(1, 30))
        return float(special.exp1(t)) + EULER_GAMMA + math.log(t)

    def cin_ref(t: float) -> float:
        if t < 0.5:
            return sum((-1) ** (k + 1) * t ** (2 * k) / (2 * k * math.factorial(2 * k)) for k in range(1, 20))
        return EULER_GAMMA + math.log(t) - float(special.sici(t)[1])

    cases = [
        ("ein_nu_1=ein", xs, lambda x: ein_nu(1.0, x).value, ein_ref),
        ("sin_1=sin", xs, lambda x: sin_frac(1.0, x).value, math.sin),
        ("cos_1=cos", xs, lambda x: cos_frac(1.0, x).value, math.cos),
        ("Sin_1=Si", xs, lambda x: sin_integral_nu(1.0, x).value, lambda x: float(special.sici(x)[0])),
        ("Cin_1=Cin", xs, lambda x: cin_integral_nu(1.0, x).value, cin_ref),
        ("creep_rate_1", xs, lambda x: creep_rate(1.0, x).value, becker_rate),
        ("ml_1=exp", np.linspace(-20.0, 5.0, 201), lambda x: ml_one(1.0, x).value, math.exp),
        ("e1_decomposition", np.geomspace(1e-3, 50.0, 60),
         lambda x: e1(x).value + EULER_GAMMA + math.log(x), lambda x: ein(x).value),
        ("ein_nu_0=t/2", pos, lambda x: ein_nu(0.0, x).value, lambda x: x / 2),
    ]
    out = []
    for name, grid, f, g in cases:
        dev = _max_dev(grid, f, g)
        out.append(CheckResult(name, dev <= 1e-12, f"max_abs={dev:.3e}"))
    return out


SUITES: dict[str, Callable[[], list[CheckResult]]] = {
    "cm": suite_cm,
    "bernstein": suite_bernstein,
    "spectra": suite_spectra,
    "reconstruction": suite_reconstruction,
    "reductions": suite_reductions,
}


def run_suite(name: str) -> list[tuple[str, CheckResult]]:
    """Run one suite, or all of them for ``name == "all"``."""
    names = list(SUITES) if name == "all" else [name]
    results = []
    for n in names:
        results.extend((n, r) for r in SUITES[n]())
    return results
