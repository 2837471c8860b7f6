"""Numerical checks of complete monotonicity and related properties.

A function f is completely monotone (CM) on a set if ``(-1)**k f^(k) >= 0``
for every k. On a grid x_0 < ... < x_m the k-th divided difference equals
``f^(k)(xi) / k!`` for some xi in [x_i, x_{i+k}], so the sign condition can be
checked without derivatives. Each difference is compared against the same
recursion applied to |f|, which measures how much rounding it can carry.
"""

from __future__ import annotations

import enum
import math
from collections.abc import Callable
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .becker import creep_rate, reconstruct_rate
from .core import DomainError, EvaluationFailure, Order

__all__ = [
    "GridKind",
    "Grid",
    "Violation",
    "CMReport",
    "check_cm",
    "check_bernstein",
    "check_reconstruction",
]

CM_TOL = 1e-9
MAX_ORDER_LIMIT = 10


class GridKind(str, enum.Enum):
    LINEAR = "Linear"
    LOGARITHMIC = "Logarithmic"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Grid:
    kind: GridKind
    start: float
    stop: float
    count: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", GridKind(self.kind))
        if not (math.isfinite(self.start) and math.isfinite(self.stop)):
            raise DomainError("grid bounds must be finite")
        if not self.start < self.stop:
            raise DomainError(f"grid needs start < stop, got {self.start}, {self.stop}")
        if self.count < 2:
            raise DomainError(f"grid needs at least 2 points, got {self.count}")
        if self.kind is GridKind.LOGARITHMIC and self.start <= 0:
            raise DomainError("logarithmic grid needs start > 0")

    @classmethod
    def linear(cls, start: float, stop: float, count: int) -> Grid:
        return cls(GridKind.LINEAR, start, stop, count)

    @classmethod
    def log(cls, start: float, stop: float, count: int) -> Grid:
        return cls(GridKind.LOGARITHMIC, start, stop, count)

    def points(self) -> np.ndarray:
        if self.kind is GridKind.LINEAR:
            return np.linspace(self.start, self.stop, self.count)
        return np.geomspace(self.start, self.stop, self.count)


class Violation(NamedTuple):
    order: int
    abscissa: float
    value: float


@dataclass(frozen=True)
class CMReport:
    function_id: str
    grid: Grid
    max_order_checked: int
    violations: tuple[Violation, ...] = ()
    max_deviation: float = field(default=0.0, compare=False)

    @property
    def passed(self) -> bool:
        return not self.violations

    @property
    def failed_orders(self) -> list[int]:
        return sorted({v.order for v in self.violations})

    def summary(self) -> str:
        status = "pass" if self.passed else "fail"
        line = (
            f"{self.function_id}: {status} orders<={self.max_order_checked} "
            f"grid={self.grid.kind}[{self.grid.start:g},{self.grid.stop:g}]x{self.grid.count} "
            f"violations={len(self.violations)}"
        )
        if self.max_deviation:
            line += f" max_dev={self.max_deviation:.3e}"
        return line


def _sample(f: Callable[[float], object], xs: np.ndarray, name: str) -> np.ndarray:
    ys = np.empty_like(xs)
    for i, x in enumerate(xs):
        try:
            ys[i] = float(f(float(x)))
        except Exception as exc:
            raise EvaluationFailure(f"{name} failed at x={x:g}: {exc}") from exc
        if not math.isfinite(ys[i]):
            raise EvaluationFailure(f"{name} returned {ys[i]} at x={x:g}")
    return ys


def _sign_scan(
    xs: np.ndarray, ys: np.ndarray, max_order: int, shift: int, tol: float
) -> list[Violation]:
    """Require ``(-1)**(k + shift) D^k >= -tol S^k`` for k = 0..max_order + shift.

    D^k are divided differences of ys and S^k the same recursion on |ys|.
    Order 0 is the plain non-negativity of ys.
    """
    found = []
    d = ys.copy()
    s = np.abs(ys)
    for k in range(max_order + shift + 1):
        if k > 0:
            span = xs[k:] - xs[:-k]
            d = (d[1:] - d[:-1]) / span
            s = (s[1:] + s[:-1]) / span
        signed = d if (k + shift) % 2 == 0 or k == 0 else -d
        bad = np.flatnonzero(signed < -tol * s)
        for i in bad:
            mid = 0.5 * (xs[i] + xs[i + k])
            found.append(Violation(k, float(mid), float(signed[i])))
    return found


def _check_order(max_order: int) -> None:
    if not 0 <= max_order <= MAX_ORDER_LIMIT:
        raise ValueError(f"max_order must lie in [0, {MAX_ORDER_LIMIT}], got {max_order}")


def check_cm(
    f: Callable[[float], object],
    grid: Grid,
    max_order: int = 8,
    name: str | None = None,
    tol: float = CM_TOL,
) -> CMReport:
    """Check f >= 0 and the alternating signs of its divided differences."""
    _check_order(max_order)
    name = name or getattr(f, "__name__", "f")
    xs = grid.points()
    if len(xs) <= max_order:
        raise DomainError(f"grid of {len(xs)} points cannot carry order {max_order}")
    ys = _sample(f, xs, name)
    found = _sign_scan(xs, ys, max_order, 0, tol)
    return CMReport(name, grid, max_order, tuple(found))


def check_bernstein(
    f: Callable[[float], object],
    grid: Grid,
    max_order: int = 8,
    name: str | None = None,
    tol: float = CM_TOL,
) -> CMReport:
    """Check f >= 0 with a completely monotone derivative.

    Divided differences of f of order j stand in for f' at order j - 1, so
    the requirement is ``(-1)**(j-1) D^j f >= 0`` for j = 1..max_order + 1.
    ``max_order`` counts derivatives of f'.
    """
    _check_order(max_order)
    name = name or getattr(f, "__name__", "f")
    xs = grid.points()
    if len(xs) <= max_order + 1:
        raise DomainError(f"grid of {len(xs)} points cannot carry order {max_order + 1}")
    ys = _sample(f, xs, name)
    found = _sign_scan(xs, ys, max_order, 1, tol)
    return CMReport(name, grid, max_order, tuple(found))


def check_reconstruction(nu: float, t_grid: Grid, rtol: float = 1e-3) -> CMReport:
    """Compare the Laplace transform of K_nu with the creep rate on t_grid.

    Each t where the relative error exceeds ``rtol`` is a violation (order 0).
    """
    Order(nu).require_unit_interval()
    ts = t_grid.points()
    rebuilt = reconstruct_rate(nu, ts)
    exact = np.array([creep_rate(nu, float(t)).value for t in ts])
    rel = np.abs(rebuilt - exact) / np.abs(exact)
    found = tuple(Violation(0, float(t), float(e)) for t, e in zip(ts, rel) if e > rtol)
    return CMReport(
        f"reconstruction[nu={nu:g}]", t_grid, 0, found, max_deviation=float(rel.max())
    )
