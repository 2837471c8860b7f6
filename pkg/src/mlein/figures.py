"""Curve families for the creep, spectrum and fractional trig plots."""

from __future__ import annotations

import enum
from collections.abc import Callable
from dataclasses import dataclass

import numpy as np

from .becker import creep_psi, creep_rate, spectrum_values
from .core import DEFAULT_TOL, EvaluationFailure, MleinError
from .trig import cin_integral_nu, cos_frac, sin_frac, sin_integral_nu

__all__ = ["FigureId", "Curve", "FigureDataset", "build_figure", "NU_WITH_ZERO", "NU_POSITIVE"]

NU_WITH_ZERO = (0.0, 0.25, 0.5, 0.75, 1.0)
NU_POSITIVE = (0.25, 0.5, 0.75, 1.0)
LINEAR_POINTS = 201
LOG_PER_DECADE = 50


class FigureId(str, enum.Enum):
    FIG1_LEFT = "Fig1Left"
    FIG1_RIGHT = "Fig1Right"
    FIG2_LEFT = "Fig2Left"
    FIG2_RIGHT = "Fig2Right"
    FIG3_LEFT = "Fig3Left"
    FIG3_RIGHT = "Fig3Right"
    FIG4_LEFT = "Fig4Left"
    FIG4_RIGHT = "Fig4Right"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Curve:
    nu: float
    x: tuple[float, ...]
    y: tuple[float, ...]


@dataclass(frozen=True)
class FigureDataset:
    figure: FigureId
    title: str
    x_label: str
    y_label: str
    log_x: bool
    curves: tuple[Curve, ...]

    def rows(self):
        for c in self.curves:
            for x, y in zip(c.x, c.y):
                yield str(self.figure), c.nu, x, y


def _rate_or_half(nu: float, t: float, tol: float):
    # the regularized nu = 0 creep law t/2 has constant rate 1/2
    return 0.5 if nu == 0.0 else creep_rate(nu, t, tol).value


_LINEAR = {
    FigureId.FIG1_LEFT: ("creep function", "t", "psi", NU_WITH_ZERO,
                         lambda nu, x, tol: creep_psi(nu, x, tol).value),
    FigureId.FIG1_RIGHT: ("rate of creep", "t", "psi'", NU_WITH_ZERO, _rate_or_half),
    FigureId.FIG3_LEFT: ("fractional sine", "x", "sin_nu", NU_POSITIVE,
                         lambda nu, x, tol: sin_frac(nu, x, tol).value),
    FigureId.FIG3_RIGHT: ("fractional cosine", "x", "cos_nu", NU_POSITIVE,
                          lambda nu, x, tol: cos_frac(nu, x, tol).value),
    FigureId.FIG4_LEFT: ("generalized sine integral", "x", "Sin_nu", NU_POSITIVE,
                         lambda nu, x, tol: sin_integral_nu(nu, x, tol).value),
    FigureId.FIG4_RIGHT: ("generalized cosine integral", "x", "Cin_nu", NU_POSITIVE,
                          lambda nu, x, tol: cin_integral_nu(nu, x, tol).value),
}


def _sample(fn: Callable, nu: float, xs: np.ndarray, tol: float) -> tuple[float, ...]:
    out = []
    for x in xs:
        try:
            out.append(float(fn(nu, float(x), tol)))
        except MleinError as exc:
            raise EvaluationFailure(f"evaluation failed at nu={nu:g}, x={x:.17g}: {exc}") from exc
    return tuple(out)


def _spectrum_curves(time: bool) -> tuple[Curve, ...]:
    count = 4 * LOG_PER_DECADE + 1
    xs = np.geomspace(1e-2, 1e2, count)
    curves = []
    for nu in NU_POSITIVE:
        if time:
            k, _ = spectrum_values(nu, 1.0 / xs)
            y = k / (xs * xs)
        else:
            y, _ = spectrum_values(nu, xs)
        curves.append(Curve(nu, tuple(float(v) for v in xs), tuple(float(v) for v in y)))
    return tuple(curves)


def build_figure(figure: FigureId | str, tol: float = DEFAULT_TOL) -> FigureDataset:
    """Evaluate every curve of one figure on its fixed grid."""
    figure = FigureId(figure)
    if figure is FigureId.FIG2_LEFT:
        return FigureDataset(figure, "frequency spectrum", "r", "K_nu", True, _spectrum_curves(False))
    if figure is FigureId.FIG2_RIGHT:
        return FigureDataset(figure, "time spectrum", "tau", "H_nu", True, _spectrum_curves(True))
    title, xl, yl, nus, fn = _LINEAR[figure]
    xs = np.linspace(0.0, 10.0, LINEAR_POINTS)
    curves = tuple(Curve(nu, tuple(float(x) for x in xs), _sample(fn, nu, xs, tol)) for nu in nus)
    return FigureDataset(figure, title, xl, yl, False, curves)
