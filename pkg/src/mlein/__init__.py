"""Mittag-Leffler functions, generalized exponential integrals and Becker-type creep."""

__version__ = "0.1.0"

from .becker import (
    SpectrumKind,
    SpectrumTable,
    creep_psi,
    creep_rate,
    laplace_psi_series,
    laplace_rate_series,
    reconstruct_rate,
    spectrum_frequency,
    spectrum_table,
    spectrum_time,
    spectrum_values,
)
from .cm import CMReport, Grid, GridKind, Violation, check_bernstein, check_cm, check_reconstruction
from .core import (
    DEFAULT_TOL,
    CutViolation,
    DomainError,
    EvalResult,
    EvaluationFailure,
    InvalidOrder,
    Method,
    MleinError,
    NonConvergent,
    ReducedAccuracy,
    SeriesDivergent,
)
from .ein_nu import EinSeriesTerm, ein_nu, ein_nu_integrand, series_terms
from .expint import e1, e_nu, ei, ein, laplace_phi, laplace_psi
from .figures import FigureDataset, FigureId, build_figure
from .special import gamma_upper, gml_series, ml_neg_power, ml_one, ml_two
from .trig import ci, cin, cin_integral_nu, cos_frac, si_classic, si_lower, sin_frac, sin_integral_nu

__all__ = [
    "__version__",
    "DEFAULT_TOL",
    "CMReport",
    "CutViolation",
    "DomainError",
    "EinSeriesTerm",
    "EvalResult",
    "EvaluationFailure",
    "FigureDataset",
    "FigureId",
    "Grid",
    "GridKind",
    "InvalidOrder",
    "Method",
    "MleinError",
    "NonConvergent",
    "ReducedAccuracy",
    "SeriesDivergent",
    "SpectrumKind",
    "SpectrumTable",
    "Violation",
    "build_figure",
    "check_bernstein",
    "check_cm",
    "check_reconstruction",
    "ci",
    "cin",
    "cin_integral_nu",
    "cos_frac",
    "creep_psi",
    "creep_rate",
    "e1",
    "e_nu",
    "ei",
    "ein",
    "ein_nu",
    "ein_nu_integrand",
    "gamma_upper",
    "gml_series",
    "laplace_phi",
    "laplace_psi",
    "laplace_psi_series",
    "laplace_rate_series",
    "ml_neg_power",
    "ml_one",
    "ml_two",
    "reconstruct_rate",
    "series_terms",
    "si_classic",
    "si_lower",
    "sin_frac",
    "sin_integral_nu",
    "spectrum_frequency",
    "spectrum_table",
    "spectrum_time",
    "spectrum_values",
]
