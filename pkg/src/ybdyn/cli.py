"""Command-line front end.

Exit codes: 0 success, 1 verification/comparison failure, 2 usage error,
3 I/O error.
"""
from __future__ import annotations

import argparse
import csv
import io
import math
import re
import sys
from typing import Sequence

import numpy as np

from .dynamics import (
    MEASURE_NAMES,
    ORACLE_FORMS,
    SweepRow,
    SweepSpec,
    compare_analytic_numeric,
    compare_h3_with_h1,
    run_sweep,
)
from .errors import YBDynError
from .verify import algebra_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3

CSV_HEADER = (
    "model", "state", "p", "theta", "phi", "B", "J", "g", "scaled_time",
    "concurrence", "eof", "c_l1", "c_r", "mid",
    "concurrence_analytic", "eof_analytic", "c_l1_analytic", "mid_analytic",
    "discrepancy",
)

DEFAULT_P_GRID = "0:1:101"
DEFAULT_TIME_GRID = "0:1pi:201"

FIGURES = {
    "fig1": ("h1", "werner"),
    "fig2": ("h1", "xlike"),
    "fig3": ("h2", "werner"),
    "fig4": ("h2", "xlike"),
}

_ANGLE_RE = re.compile(
    r"^\s*(?P<sign>[-+]?)(?P<coef>(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?)?\s*\*?\s*pi"
    r"(?:\s*/\s*(?P<div>\d+(?:\.\d*)?))?\s*$"
)


class UsageError(Exception):
    pass


def parse_angle(text: str) -> float:
    """Parse a real number, optionally in units of pi: '0.25pi', 'pi/4', '-pi', '1.2'."""
    m = _ANGLE_RE.match(text)
    if m:
        coef = float(m["coef"]) if m["coef"] else 1.0
        sign = -1.0 if m["sign"] == "-" else 1.0
        div = float(m["div"]) if m["div"] else 1.0
        return sign * coef * math.pi / div
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number or multiple of pi: {text!r}") from None


def parse_grid(text: str) -> tuple[float, ...]:
    """'min:max:count' -> evenly spaced values (count >= 1)."""
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"grid must be min:max:count, got {text!r}")
    lo, hi = parse_angle(parts[0]), parse_angle(parts[1])
    try:
        n = int(parts[2])
    except ValueError:
        raise argparse.ArgumentTypeError(f"grid count must be an integer, got {parts[2]!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError("grid count must be >= 1")
    if n == 1:
        return (lo,)
    return tuple(float(x) for x in np.linspace(lo, hi, n))


def parse_epsilon(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        v = 0
    if v not in (1, -1):
        raise argparse.ArgumentTypeError(f"epsilon must be +1 or -1, got {text!r}")
    return v


def fmt(x) -> str:
    if x is None:
        return ""
    return format(float(x) + 0.0, ".12g")


def row_cells(row: SweepRow) -> list[str]:
    head = [row.model, row.state] + [
        fmt(v) for v in (row.p, row.theta, row.phi, row.B, row.J, row.g, row.scaled_time)
    ]
    num = [fmt(getattr(row.numeric, m)) for m in ("concurrence", "eof", "c_l1", "c_r", "mid")]
    if row.analytic is None:
        ana = [""] * len(MEASURE_NAMES)
    else:
        ana = [fmt(getattr(row.analytic, m)) for m in MEASURE_NAMES]
    return head + num + ana + [fmt(row.discrepancy)]


def write_csv(rows: Sequence[SweepRow], out) -> None:
    w = csv.writer(out, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in rows:
        w.writerow(row_cells(r))


def _emit(rows: Sequence[SweepRow], path: str | None) -> None:
    buf = io.StringIO()
    write_csv(rows, buf)
    if path is None or path == "-":
        sys.stdout.write(buf.getvalue())
        return
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(buf.getvalue())


def _spec_from_args(args, model=None, state=None, p_grid=None, time_grid=None) -> SweepSpec:
    return SweepSpec(
        model=model or args.model,
        state=state or args.state,
        p_grid=p_grid if p_grid is not None else args.p_grid,
        scaled_time_grid=time_grid if time_grid is not None else args.time_grid,
        phi=args.phi,
        theta=args.theta,
        B=args.B,
        J=args.J,
        g=args.g,
        epsilon=args.epsilon,
    )


# commands ------------------------------------------------------------------


def cmd_verify_algebra(args) -> int:
    checks = algebra_suite(tol=args.tol, sites=args.sites)
    for c in checks:
        tol = "" if c.tol is None else f" (tol {c.tol:g})"
        line = f"{c.status:4s}  {c.residual:.3e}{tol}  {c.name}"
        if c.detail:
            line += f"  [{c.detail}]"
        print(line)
    failed = [c for c in checks if not c.passed]
    print(f"{len(checks) - len(failed)}/{len(checks)} checks passed")
    return EXIT_FAIL if failed else EXIT_OK


def cmd_measure(args) -> int:
    if args.p is None or args.time is None:
        raise UsageError("measure requires --p and --time")
    spec = _spec_from_args(args, p_grid=(args.p,), time_grid=(args.time,))
    _emit(run_sweep(spec, args.oracle_form), None)
    return EXIT_OK


def cmd_sweep(args) -> int:
    _emit(run_sweep(_spec_from_args(args), args.oracle_form), args.out)
    return EXIT_OK


def cmd_figures(args) -> int:
    model, state = FIGURES[args.which]
    time_grid = (0.0,) if args.which == "fig3" else args.time_grid
    spec = _spec_from_args(args, model=model, state=state, time_grid=time_grid)
    rows = run_sweep(spec, args.oracle_form)
    _emit(rows, args.out)
    worst = max(r.discrepancy for r in rows)
    print(f"{args.which}: {len(rows)} rows, max analytic-numeric discrepancy {worst:.3e}", file=sys.stderr)
    return EXIT_OK


def cmd_compare(args) -> int:
    tol = 1e-9 if args.tol is None else args.tol
    spec = _spec_from_args(args)
    if spec.model == "h3":
        report = compare_h3_with_h1(spec)
    else:
        report = compare_analytic_numeric(spec, args.oracle_form)
    print(f"{report.model}/{report.state} mode={report.mode} tol={tol:g}")
    for m, v in report.max_discrepancy.items():
        p, t = report.worst_point[m]
        status = "PASS" if v < tol else "FAIL"
        print(f"{status:4s}  {m:12s} max|diff| = {v:.3e}  at p={p:.6g}, scaled_time={t:.6g}")
    if report.time_variation is not None:
        for m, v in report.time_variation.items():
            status = "PASS" if v < 1e-10 else "FAIL"
            print(f"{status:4s}  {m:12s} time variation = {v:.3e} (tol 1e-10)")
    ok = report.passed(tol)
    print("PASS" if ok else "FAIL")
    return EXIT_OK if ok else EXIT_FAIL


# parser --------------------------------------------------------------------


def _add_model_flags(sp, grids=True, model_state=True):
    if model_state:
        sp.add_argument("--model", choices=("h1", "h2", "h3"), default="h1")
        sp.add_argument("--state", choices=("werner", "xlike"), default="werner")
    if grids:
        sp.add_argument("--p-grid", type=parse_grid, default=parse_grid(DEFAULT_P_GRID),
                        help=f"min:max:count (default {DEFAULT_P_GRID})")
        sp.add_argument("--time-grid", type=parse_grid, default=parse_grid(DEFAULT_TIME_GRID),
                        help=f"scaled time Bt (h1, h3) or Jt (h2), min:max:count (default {DEFAULT_TIME_GRID})")
    sp.add_argument("--phi", type=parse_angle, default=math.pi / 4, help="accepts e.g. 0.25pi")
    sp.add_argument("--theta", type=parse_angle, default=math.pi / 2)
    sp.add_argument("--B", type=float, default=1.0)
    sp.add_argument("--J", type=float, default=1.0)
    sp.add_argument("--g", type=float, default=0.5)
    sp.add_argument("--epsilon", type=parse_epsilon, default=1)
    sp.add_argument("--oracle-form", choices=ORACLE_FORMS, default="published",
                    help="closed forms as published ('published') or with corrected X-state expressions ('exact')")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ybdyn", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("verify-algebra", help="R-matrix, TLA, YBE and Hamiltonian residual suites")
    sp.add_argument("--tol", type=float, default=None, help="override every gated tolerance")
    sp.add_argument("--sites", type=int, choices=(3, 4), default=3)
    sp.set_defaults(func=cmd_verify_algebra)

    sp = sub.add_parser("measure", help="one CSV row for a single (p, scaled time) point")
    _add_model_flags(sp, grids=False)
    sp.add_argument("--p", type=float, default=None)
    sp.add_argument("--time", "--bt", "--jt", dest="time", type=parse_angle, default=None,
                    help="scaled time (Bt for h1/h3, Jt for h2)")
    sp.set_defaults(func=cmd_measure)

    sp = sub.add_parser("sweep", help="CSV over a (p, scaled time) grid")
    _add_model_flags(sp)
    sp.add_argument("--out", default=None, help="output path (default stdout)")
    sp.set_defaults(func=cmd_sweep)

    sp = sub.add_parser("figures", help="preset grids for the four published figures")
    sp.add_argument("which", choices=sorted(FIGURES))
    _add_model_flags(sp, model_state=False)
    sp.add_argument("--out", default=None, help="output path (default stdout)")
    sp.set_defaults(func=cmd_figures)

    sp = sub.add_parser("compare", help="max analytic-vs-numeric discrepancy per measure")
    _add_model_flags(sp)
    sp.add_argument("--tol", type=float, default=None, help="default 1e-9")
    sp.set_defaults(func=cmd_compare)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except OSError as exc:
        print(f"ybdyn: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (YBDynError, ValueError) as exc:
        print(f"ybdyn: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
