"""Shared result types, error classes and tolerance handling."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

DEFAULT_TOL = 1e-12
EPS = 2.220446049250313e-16
EULER_GAMMA = 0.57721566490153286060651209008240243


class MleinError(Exception):
    """Base class for evaluation errors raised by this package."""


class InvalidOrder(MleinError, ValueError):
    pass


class DomainError(MleinError, ValueError):
    pass


class CutViolation(DomainError):
    """Argument lies on the branch cut (closed negative real axis)."""


class SeriesDivergent(DomainError):
    pass


class NonConvergent(MleinError, ArithmeticError):
    pass


class EvaluationFailure(MleinError):
    """A black-box function failed or returned a non-finite value."""


class ReducedAccuracy(UserWarning):
    """Two representations disagreed in their overlap zone."""


class Method(str, enum.Enum):
    TAYLOR = "TaylorSeries"
    ASYMPTOTIC = "AsymptoticExpansion"
    QUADRATURE = "Quadrature"
    CLOSED_FORM = "ClosedForm"
    REGULARIZED = "Regularized"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class EvalResult:
    """A function value with an absolute error estimate.

    The estimate is an intended upper bound, not a guarantee.
    """

    value: float | complex
    abs_err_estimate: float
    terms_used: int
    method: Method

    def __float__(self) -> float:
        if isinstance(self.value, complex):
            raise TypeError("complex result; use .value")
        return float(self.value)

    def scaled(self, factor: float, offset: float = 0.0) -> EvalResult:
        """Return ``factor * value + offset`` with the error scaled to match."""
        value = factor * self.value + offset
        err = abs(factor) * self.abs_err_estimate + 2 * EPS * abs(value)
        return EvalResult(value, err, self.terms_used, self.method)


@dataclass(frozen=True)
class Order:
    """Fractional order nu with optional second Mittag-Leffler parameter mu."""

    nu: float
    mu: float = 1.0

    def __post_init__(self) -> None:
        if not (math.isfinite(self.nu) and self.nu >= 0):
            raise InvalidOrder(f"nu must be finite and >= 0, got {self.nu}")
        if not (math.isfinite(self.mu) and self.mu > 0):
            raise InvalidOrder(f"mu must be finite and > 0, got {self.mu}")

    def require_positive(self) -> Order:
        if self.nu <= 0:
            raise InvalidOrder(f"nu must be > 0, got {self.nu}")
        return self

    def require_unit_interval(self, *, allow_zero: bool = False) -> Order:
        lo_ok = self.nu >= 0 if allow_zero else self.nu > 0
        if not (lo_ok and self.nu <= 1):
            interval = "[0, 1]" if allow_zero else "(0, 1]"
            raise InvalidOrder(f"nu must lie in {interval}, got {self.nu}")
        return self


def accept(result: EvalResult, tol: float, what: str) -> EvalResult:
    """Raise NonConvergent unless the error estimate meets ``tol``.

    ``tol`` is absolute for |value| <= 1 and relative above that.
    """
    limit = tol * max(1.0, abs(result.value))
    if not result.abs_err_estimate <= limit:
        raise NonConvergent(
            f"{what}: error estimate {result.abs_err_estimate:.3g} exceeds "
            f"tolerance {limit:.3g} ({result.method}, {result.terms_used} terms)"
        )
    return result


def check_real(x: float, name: str = "x") -> float:
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"{name} must be finite, got {x}")
    return x
