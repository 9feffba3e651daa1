"""Command-line front end: reproduce the bound studies and select degrees.

Subcommands
-----------
ratio-figure   Weighted-ratio curves of the sharp Bernstein inequality,
               one CSV (columns ``x,ratio``) per requested degree.
coeff-bounds   Coefficient-versus-bound table for the kink function
               |x - t| (columns ``n,abs_a_n,B1,B2,B1_over_B2``).
error-study    Measured sup error of the truncated series against the
               a-priori bound (columns
               ``N,measured_sup_error,corollary_bound,bound_over_error``),
               plus a log-log decay-rate fit over the upper half of the
               N range.
select-degree  Smallest truncation length whose error bound meets a
               target accuracy, with a measured confirmation when the
               result is small enough to check directly.

``--format svg`` writes an SVG plot next to each CSV.  Numbers are printed
with 17 significant digits, so CSV values round-trip to the exact double.

Function descriptors
--------------------
``--function abs-kink`` takes ``--t`` (rationals like 6/7 accepted).
``--function polynomial`` takes ``--pieces`` with the grammar

    breakpoints ; coeffs piece 1 ; coeffs piece 2 ; ...

where each field is a comma-separated list of numbers (rationals
allowed), breakpoints run from -1 to 1, and each coefficient list gives
one piece's polynomial in ascending powers of x.  Example: |x| is
``"-1,0,1 ; 0,-1 ; 0,1"``.

Exit codes: 0 success, 2 bad arguments or domain violation, 3 I/O
failure, 4 internal numerical failure.
"""

import argparse
import os
import sys
from fractions import Fraction

import numpy as np

from . import bounds, legendre, piecewise, series
from .quadrature import ConvergenceError
from .svgplot import Curve, render_plot

__all__ = ["main"]

_MEASURE_CAP = 5000


def _parse_number(text):
    """A float, with p/q rationals accepted and converted exactly."""
    text = text.strip()
    try:
        if "/" in text:
            return float(Fraction(text))
        return float(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from exc


def _parse_pieces(descriptor):
    fields = [f.strip() for f in descriptor.split(";")]
    if len(fields) < 2:
        raise ValueError(
            "pieces descriptor needs breakpoints and at least one coefficient list"
        )
    try:
        groups = [[_parse_number(v) for v in field.split(",")] for field in fields]
    except argparse.ArgumentTypeError as exc:
        raise ValueError(str(exc)) from None
    return piecewise.make_piecewise_polynomial(groups[0], groups[1:])


def _build_function(args):
    if args.function == "abs-kink":
        return piecewise.make_abs_kink(args.t)
    if args.pieces is None:
        raise ValueError("--function polynomial requires --pieces")
    return _parse_pieces(args.pieces)


def _format_value(v):
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    return f"{v:.17g}"


def _write_csv(path, header, rows):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(_format_value(v) for v in row) + "\n")


def cmd_ratio_figure(args):
    grid = np.linspace(-1.0, 1.0, args.grid)
    os.makedirs(args.out, exist_ok=True)
    for n in args.n:
        ratio = legendre.bernstein_ratio_curve(n, grid)
        path = os.path.join(args.out, f"ratio_n{n}.csv")
        _write_csv(path, ["x", "ratio"], zip(grid, ratio))
        j = int(np.argmax(ratio))
        print(f"n={n}: wrote {path}; max ratio {ratio[j]:.12f} at x={grid[j]:.12f}")
        if args.format == "svg":
            svg_path = os.path.join(args.out, f"ratio_n{n}.svg")
            render_plot(
                svg_path,
                [Curve(grid, ratio, label=f"n={n}")],
                title="Weighted ratio against its sharp bound",
                x_label="x",
                y_label="ratio",
            )
            print(f"n={n}: wrote {svg_path}")
    return 0


def cmd_coeff_bounds(args):
    if args.n_min < 3:
        raise ValueError("coeff-bounds needs n-min >= 3 so both bounds apply")
    if args.n_max < args.n_min:
        raise ValueError("need n-max >= n-min")
    n = np.arange(args.n_min, args.n_max + 1)
    table = bounds.abs_kink_bound_table(args.t, n)
    rows = zip(table.n, table.abs_a, table.B1, table.B2, table.ratio)
    _write_csv(args.out, ["n", "abs_a_n", "B1", "B2", "B1_over_B2"], rows)
    print(f"wrote {args.out} ({n.size} rows, t={args.t})")
    if args.format == "svg":
        svg_path = os.path.splitext(args.out)[0] + ".svg"
        render_plot(
            svg_path,
            [
                Curve(table.n, table.B1, label="B1"),
                Curve(table.n, table.B2, label="B2", dash="6,4"),
                Curve(table.n, table.abs_a, label="|a_n|", kind="dots"),
            ],
            title=f"Coefficient bounds for |x - t|, t={args.t}",
            x_label="n",
            y_label="magnitude",
            log_y=True,
        )
        print(f"wrote {svg_path}")
    return 0


def _error_study_n_values(args):
    if args.n_min is not None or args.n_max is not None:
        lo = 3 if args.n_min is None else args.n_min
        hi = 200 if args.n_max is None else args.n_max
        if lo < 3 or hi < lo:
            raise ValueError("need 3 <= n-min <= n-max")
        return list(range(lo, hi + 1))
    return list(range(3, 201)) + [400, 800]


def cmd_error_study(args):
    n_values = _error_study_n_values(args)
    n_top = max(n_values)
    f = piecewise.make_abs_kink(args.t)
    expansion = series.abs_kink_series(args.t, n_top)
    sup_errors = series.truncation_sup_errors(f, expansion, grid_size=args.grid)
    params = bounds.BoundParameters(m=1, V=piecewise.abs_kink_smoothness(args.t).V)
    rows = []
    for N in n_values:
        measured = sup_errors[N - 1]
        bound = bounds.uniform_error_bound(N, params)
        rows.append((N, measured, bound, bound / measured))
    _write_csv(args.out, ["N", "measured_sup_error", "corollary_bound",
                          "bound_over_error"], rows)
    print(f"wrote {args.out} ({len(rows)} rows, t={args.t}, grid={args.grid})")

    upper = sorted(n_values)[len(n_values) // 2:]
    log_n = np.log([N for N in upper])
    log_e = np.log([sup_errors[N - 1] for N in upper])
    slope = float(np.polyfit(log_n, log_e, 1)[0])
    print(f"log-log decay rate over N in [{upper[0]}, {upper[-1]}]: "
          f"slope {slope:.4f}")
    if args.format == "svg":
        svg_path = os.path.splitext(args.out)[0] + ".svg"
        ns = [r[0] for r in rows]
        render_plot(
            svg_path,
            [
                Curve(ns, [r[1] for r in rows], label="measured"),
                Curve(ns, [r[2] for r in rows], label="bound", dash="6,4"),
            ],
            title=f"Truncation error of |x - t|, t={args.t}",
            x_label="N",
            y_label="sup error",
            log_x=True,
            log_y=True,
        )
        print(f"wrote {svg_path}")
    return 0


def cmd_select_degree(args):
    f = _build_function(args)
    if args.function == "abs-kink":
        data = piecewise.abs_kink_smoothness(args.t)
    else:
        m = piecewise.smoothness_order(f)
        if m is None:
            degree = max(p.poly.degree() for p in f.pieces)
            print(f"the pieces join into a single polynomial of degree {degree}; "
                  f"the expansion is exact for every N >= {degree + 1}")
            print(f"selected N = {degree + 1} (error bound 0)")
            return 0
        if m == 0:
            raise ValueError(
                "the error bound needs m >= 1; an m = 0 function only admits "
                "the coefficient bound B1"
            )
        data = piecewise.smoothness_data(f, m, tolerance=1e-12)
    params = bounds.BoundParameters(m=data.m, V=data.V, V_hat=data.V_hat)
    N = bounds.min_degree_for_tolerance(args.eps, params)
    bound = bounds.uniform_error_bound(N, params)
    print(f"smoothness order m = {params.m}, V_m = {params.V:.17g} ({data.provenance})")
    print(f"selected N = {N}")
    print(f"error bound at N: {bound:.17g} <= eps = {args.eps:.17g}")
    if N <= _MEASURE_CAP:
        expansion = series.compute_coefficients(f, N)
        measured = series.measure_uniform_error(f, expansion, grid_size=args.grid)
        verdict = "yes" if measured.sup_error <= args.eps else "NO"
        print(f"measured sup error at N: {measured.sup_error:.17g} "
              f"(<= eps: {verdict})")
    else:
        print(f"measurement skipped: N exceeds the desk-scale cap {_MEASURE_CAP}")
    return 0


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="legbounds",
        description="Legendre expansions of piecewise-smooth functions and "
                    "their a-priori coefficient and error bounds",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ratio-figure",
                       help="weighted Bernstein-ratio curves, one CSV per degree")
    p.add_argument("--n", type=int, nargs="+", default=[2, 6, 18],
                   help="degrees to plot (default: 2 6 18)")
    p.add_argument("--grid", type=int, default=2001,
                   help="uniform grid size on [-1, 1] (default: 2001)")
    p.add_argument("--out", default=".", help="output directory (default: .)")
    p.add_argument("--format", choices=["csv", "svg"], default="csv",
                   help="svg additionally writes a plot per degree")
    p.set_defaults(func=cmd_ratio_figure)

    p = sub.add_parser("coeff-bounds",
                       help="per-degree |a_n| against the B1 and B2 bounds for |x - t|")
    p.add_argument("--t", type=_parse_number, default=0.0,
                   help="kink location in (-1, 1); rationals like 6/7 accepted")
    p.add_argument("--n-min", type=int, default=5)
    p.add_argument("--n-max", type=int, default=400)
    p.add_argument("--out", default="coeff_bounds.csv")
    p.add_argument("--format", choices=["csv", "svg"], default="csv")
    p.set_defaults(func=cmd_coeff_bounds)

    p = sub.add_parser("error-study",
                       help="measured sup error of the truncation against its bound")
    p.add_argument("--t", type=_parse_number, default=0.0)
    p.add_argument("--n-min", type=int, default=None,
                   help="with --n-max, replaces the default N set {3..200, 400, 800}")
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--grid", type=int, default=100_000,
                   help="Chebyshev measurement grid size (default: 100000)")
    p.add_argument("--out", default="error_study.csv")
    p.add_argument("--format", choices=["csv", "svg"], default="csv")
    p.set_defaults(func=cmd_error_study)

    p = sub.add_parser("select-degree",
                       help="smallest N whose error bound meets a target accuracy")
    p.add_argument("--eps", type=_parse_number, required=True,
                   help="target uniform accuracy (> 0)")
    p.add_argument("--function", choices=["abs-kink", "polynomial"],
                   default="abs-kink")
    p.add_argument("--t", type=_parse_number, default=0.0,
                   help="kink location for abs-kink")
    p.add_argument("--pieces", default=None,
                   help="piecewise-polynomial descriptor (see module help)")
    p.add_argument("--grid", type=int, default=100_000,
                   help="grid for the measured confirmation")
    p.set_defaults(func=cmd_select_degree)

    return parser


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return 3
    except (ConvergenceError, FloatingPointError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
