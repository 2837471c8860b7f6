"""Command-line front end: ``mlein eval|figure|creep|spectrum|trig|verify``.

Data goes to stdout (or ``--out``) as CSV, diagnostics to stderr.
Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 evaluation or
domain error.
"""

from __future__ import annotations

import argparse
import math
import sys
from collections.abc import Callable, Iterable, Sequence

import numpy as np

from . import __version__
from .becker import (
    SpectrumKind,
    creep_psi,
    creep_rate,
    laplace_psi_series,
    laplace_rate_series,
    spectrum_frequency,
    spectrum_time,
)
from .core import DEFAULT_TOL, EvalResult, Method, MleinError
from .ein_nu import ein_nu, ein_nu_integrand
from .expint import e1, e_nu, ei, ein, laplace_phi, laplace_psi
from .figures import FigureId, build_figure
from .special import gamma_upper, ml_neg_power, ml_one, ml_two
from .suites import SUITES, run_suite
from .trig import ci, cin, cin_integral_nu, cos_frac, si_classic, si_lower, sin_frac, sin_integral_nu

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_EVAL = 3


class UsageError(Exception):
    pass


def _closed(v: float) -> EvalResult:
    return EvalResult(float(v), 0.0, 0, Method.CLOSED_FORM)


# name -> (needs nu, evaluator(args, x, tol))
FUNCTIONS: dict[str, tuple[bool, Callable[[argparse.Namespace, float, float], EvalResult]]] = {
    "ein": (False, lambda a, x, tol: ein(x, tol)),
    "e1": (False, lambda a, x, tol: e1(x, tol)),
    "ei": (False, lambda a, x, tol: ei(x, tol)),
    "e_nu": (True, lambda a, x, tol: e_nu(a.nu, x, tol)),
    "laplace_phi": (False, lambda a, x, tol: _closed(laplace_phi(x))),
    "laplace_psi": (False, lambda a, x, tol: _closed(laplace_psi(x))),
    "ml": (True, lambda a, x, tol: ml_one(a.nu, x, tol)),
    "ml2": (True, lambda a, x, tol: ml_two(a.nu, a.mu, x, tol)),
    "ml_neg_power": (True, lambda a, x, tol: ml_neg_power(a.nu, x, tol)),
    "gamma_upper": (True, lambda a, x, tol: gamma_upper(a.nu, x, tol)),
    "ein_nu": (True, lambda a, x, tol: ein_nu(a.nu, x, tol)),
    "ein_nu_integrand": (True, lambda a, x, tol: ein_nu_integrand(a.nu, x, tol)),
    "creep_psi": (True, lambda a, x, tol: creep_psi(a.nu, x, tol)),
    "creep_rate": (True, lambda a, x, tol: creep_rate(a.nu, x, tol)),
    "laplace_psi_series": (True, lambda a, x, tol: laplace_psi_series(a.nu, x, tol)),
    "laplace_rate_series": (True, lambda a, x, tol: laplace_rate_series(a.nu, x, tol)),
    "spectrum_frequency": (True, lambda a, x, tol: spectrum_frequency(a.nu, x, tol)),
    "spectrum_time": (True, lambda a, x, tol: spectrum_time(a.nu, x, tol)),
    "si": (False, lambda a, x, tol: si_classic(x, tol)),
    "si_lower": (False, lambda a, x, tol: si_lower(x, tol)),
    "cin": (False, lambda a, x, tol: cin(x, tol)),
    "ci": (False, lambda a, x, tol: ci(x, tol)),
    "sin_frac": (True, lambda a, x, tol: sin_frac(a.nu, x, tol)),
    "cos_frac": (True, lambda a, x, tol: cos_frac(a.nu, x, tol)),
    "sin_integral_nu": (True, lambda a, x, tol: sin_integral_nu(a.nu, x, tol)),
    "cin_integral_nu": (True, lambda a, x, tol: cin_integral_nu(a.nu, x, tol)),
}


def fmt(v: float) -> str:
    return f"{v:.16e}"


def _parse_range(text: str) -> tuple[float, float]:
    parts = text.split(":")
    if len(parts) != 2:
        raise UsageError(f"--range expects a:b, got {text!r}")
    try:
        a, b = float(parts[0]), float(parts[1])
    except ValueError:
        raise UsageError(f"--range expects numbers, got {text!r}") from None
    if not (math.isfinite(a) and math.isfinite(b) and a < b):
        raise UsageError(f"--range needs finite a < b, got {text!r}")
    return a, b


def grid_points(args: argparse.Namespace, default_range: str, default_grid: str) -> np.ndarray:
    """Abscissae from ``--points`` or from ``--range``/``--count``/``--grid``."""
    if getattr(args, "points", None):
        try:
            return np.array([float(p) for p in args.points.split(",") if p.strip()])
        except ValueError:
            raise UsageError(f"--points expects comma separated numbers, got {args.points!r}") from None
    a, b = _parse_range(args.range or default_range)
    if args.count < 2:
        raise UsageError(f"--count must be >= 2, got {args.count}")
    grid = args.grid or default_grid
    if grid == "log":
        if a <= 0:
            raise UsageError("--grid log needs a positive range")
        return np.geomspace(a, b, args.count)
    return np.linspace(a, b, args.count)


def _failure(what: str, x: float, exc: MleinError) -> MleinError:
    # keep the original class so the message names the violated condition
    return type(exc)(f"{what} failed at x={x:.17g}: {exc}")


def cmd_eval(args: argparse.Namespace) -> Iterable[str]:
    if args.fn not in FUNCTIONS:
        raise UsageError(f"unknown function {args.fn!r}; known: {', '.join(sorted(FUNCTIONS))}")
    needs_nu, fn = FUNCTIONS[args.fn]
    if needs_nu and args.nu is None:
        raise UsageError(f"--nu is required for {args.fn}")
    xs = grid_points(args, "0:10", "lin")
    rows = ["x,value,abs_err_estimate,method,terms"]
    for x in xs:
        try:
            r = fn(args, float(x), args.tol)
        except MleinError as exc:
            raise _failure(args.fn, x, exc) from exc
        rows.append(f"{fmt(x)},{fmt(r.value)},{fmt(r.abs_err_estimate)},{r.method},{r.terms_used}")
    return rows


def cmd_figure(args: argparse.Namespace) -> Iterable[str]:
    ds = build_figure(args.figure, args.tol)
    if args.plot_script:
        with open(args.plot_script, "w", newline="\n") as fh:
            fh.write(plot_script(ds.figure, ds.x_label, ds.y_label, ds.log_x))
    rows = ["figure,nu,x,y"]
    rows.extend(f"{fig},{fmt(nu)},{fmt(x)},{fmt(y)}" for fig, nu, x, y in ds.rows())
    return rows


def cmd_creep(args: argparse.Namespace) -> Iterable[str]:
    ts = grid_points(args, "0:10", "lin")
    rows = ["t,psi,psi_rate"]
    for t in ts:
        try:
            psi = creep_psi(args.nu, float(t), args.tol).value
            rate = 0.5 if args.nu == 0 else creep_rate(args.nu, float(t), args.tol).value
        except MleinError as exc:
            raise _failure("creep", t, exc) from exc
        rows.append(f"{fmt(t)},{fmt(psi)},{fmt(rate)}")
    return rows


def cmd_spectrum(args: argparse.Namespace) -> Iterable[str]:
    kind = SpectrumKind(args.kind.capitalize())
    fn = spectrum_frequency if kind is SpectrumKind.FREQUENCY else spectrum_time
    xs = grid_points(args, "1e-2:1e2", "log")
    rows = ["x,density"]
    for x in xs:
        try:
            rows.append(f"{fmt(x)},{fmt(fn(args.nu, float(x), args.tol).value)}")
        except MleinError as exc:
            raise _failure(f"spectrum ({kind})", x, exc) from exc
    return rows


def cmd_trig(args: argparse.Namespace) -> Iterable[str]:
    xs = grid_points(args, "0:10", "lin")
    fns = (sin_frac, cos_frac, sin_integral_nu, cin_integral_nu)
    rows = ["x,sin_nu,cos_nu,Sin_nu,Cin_nu"]
    for x in xs:
        try:
            vals = [f(args.nu, float(x), args.tol).value for f in fns]
        except MleinError as exc:
            raise _failure("trig", x, exc) from exc
        rows.append(",".join(fmt(v) for v in (x, *vals)))
    return rows


def plot_script(figure: FigureId, x_label: str, y_label: str, log_x: bool) -> str:
    return "\n".join([
        "import sys",
        "import matplotlib.pyplot as plt",
        "import numpy as np",
        "",
        "data = np.genfromtxt(sys.argv[1], delimiter=',', skip_header=2, usecols=(1, 2, 3))",
        "for nu in np.unique(data[:, 0]):",
        "    sel = data[:, 0] == nu",
        "    plt.plot(data[sel, 1], data[sel, 2], label=f'nu = {nu:g}')",
        *(["plt.xscale('log')"] if log_x else []),
        f"plt.xlabel({x_label!r})",
        f"plt.ylabel({y_label!r})",
        f"plt.title({str(figure)!r})",
        "plt.legend()",
        f"plt.savefig({str(figure) + '.png'!r}, dpi=150)",
        "",
    ])


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mlein", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"mlein {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp: argparse.ArgumentParser, nu_required: bool = False, grid: bool = True) -> None:
        sp.add_argument("--tol", type=float, default=DEFAULT_TOL, help="absolute/relative tolerance")
        sp.add_argument("--out", help="write CSV to FILE instead of stdout")
        if nu_required is not None:
            sp.add_argument("--nu", type=float, required=nu_required, help="order nu")
        if grid:
            sp.add_argument("--points", help="comma separated abscissae")
            sp.add_argument("--range", help="interval a:b for a generated grid")
            sp.add_argument("--count", type=int, default=201, help="number of grid points")
            sp.add_argument("--grid", choices=("lin", "log"), help="grid spacing")

    sp = sub.add_parser("eval", help="evaluate one function on a grid")
    sp.add_argument("--fn", required=True, help="function name: " + ", ".join(FUNCTIONS))
    sp.add_argument("--mu", type=float, default=1.0, help="second parameter of ml2")
    common(sp)
    sp.set_defaults(handler=cmd_eval)

    sp = sub.add_parser("figure", help="emit the curve family of one figure")
    sp.add_argument("figure", choices=[f.value for f in FigureId])
    sp.add_argument("--plot-script", help="also write a matplotlib script to FILE")
    common(sp, nu_required=None, grid=False)
    sp.set_defaults(handler=cmd_figure)

    sp = sub.add_parser("creep", help="creep function and rate of creep")
    common(sp, nu_required=True)
    sp.set_defaults(handler=cmd_creep)

    sp = sub.add_parser("spectrum", help="frequency or time spectrum")
    sp.add_argument("--kind", choices=("frequency", "time"), default="frequency")
    common(sp, nu_required=True)
    sp.set_defaults(handler=cmd_spectrum)

    sp = sub.add_parser("trig", help="fractional sine, cosine and their integrals")
    common(sp, nu_required=True)
    sp.set_defaults(handler=cmd_trig)

    sp = sub.add_parser("verify", help="run a verification suite")
    sp.add_argument("--suite", choices=(*SUITES, "all"), default="all")
    sp.set_defaults(handler=None)
    return p


def _emit(rows: Iterable[str], header: str, out: str | None) -> None:
    text = header + "\n" + "".join(r + "\n" for r in rows)
    if out:
        with open(out, "w", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
        sys.stdout.flush()


def _verify(suite: str) -> int:
    results = run_suite(suite)
    for name, r in results:
        print(r.line(name))
    failed = sum(not r.passed for _, r in results)
    status = "PASS" if not failed else "FAIL"
    print(f"SUMMARY {suite} {status} checks={len(results)} failed={failed}")
    return EXIT_OK if not failed else EXIT_VERIFY


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "verify":
            return _verify(args.suite)
        rows = list(args.handler(args))
    except UsageError as exc:
        print(f"mlein: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (MleinError, ValueError) as exc:
        print(f"mlein: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_EVAL
    _emit(rows, f"# mlein {__version__} {' '.join(argv)}", args.out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
