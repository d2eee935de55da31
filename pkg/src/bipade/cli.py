"""Command-line front end: series I/O, approximants, the Riccati demo,
error tables, and benchmarks.

Exit codes: 0 success, 2 invalid input, 3 table degeneracy, 4 cross-check
failure.  The PADE_MODE environment variable (exact | float) sets the
default arithmetic mode; command-line flags win.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import multiprocessing
import os
import statistics
import sys
import time
from fractions import Fraction
from typing import List, Optional

from .algebra import poly_eval
from .bivariate import left_pade, oracle_left_pade, right_pade
from .errors import DegenerateTableError, InputError, PadeError
from .riccati import (
    RiccatiProblem,
    direct_coeff_ratios,
    error_table_row,
    estimate_c01,
    exact_c01_mp,
    jacobi_explicit_pade,
    left_pade_refined,
    right_induction_coeffs,
)
from .series import BivSeries
from .univariate import jacobi_pade, oracle_pade

EXIT_INPUT = 2
EXIT_DEGENERACY = 3
EXIT_CHECK = 4

CSV_HEADER = ["n", "err_left", "err_right", "time_general_s", "time_refined_s"]


# ---------------------------------------------------------------------------
# Series files
# ---------------------------------------------------------------------------


def _parse_value(raw, mode: str):
    """One series entry: 'p/q' strings (or integers) in exact mode;
    decimals are accepted only in float mode."""
    if mode == "exact":
        if isinstance(raw, int):
            return Fraction(raw)
        if isinstance(raw, str):
            try:
                value = Fraction(raw)
            except (ValueError, ZeroDivisionError) as exc:
                raise InputError(f"bad rational literal {raw!r}") from exc
            if "." in raw or "e" in raw.lower():
                raise InputError(
                    f"decimal literal {raw!r} not allowed in exact mode; use p/q"
                )
            return value
        raise InputError(
            f"value {raw!r} not allowed in exact mode; use 'p/q' strings"
        )
    try:
        if isinstance(raw, str):
            return float(Fraction(raw))
        return float(raw)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise InputError(f"bad numeric literal {raw!r}") from exc


def _format_value(v) -> object:
    if isinstance(v, Fraction):
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    return v


def load_series_file(path: str, mode: str) -> BivSeries:
    """Read a series JSON file {name, N, M, entries: [[n, m, value], ...]}."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read series file {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"series file {path} is not valid JSON: {exc}") from exc
    try:
        N, M = int(doc["N"]), int(doc["M"])
        entries = doc["entries"]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"series file {path} missing N/M/entries") from exc
    table = [[None] * (M + 1) for _ in range(N + 1)]
    for entry in entries:
        try:
            n, m, raw = entry
            n, m = int(n), int(m)
        except (TypeError, ValueError) as exc:
            raise InputError(f"bad series entry {entry!r}") from exc
        if not (0 <= n <= N and 0 <= m <= M):
            raise InputError(f"series entry ({n}, {m}) outside declared orders")
        if table[n][m] is not None:
            raise InputError(f"series entry ({n}, {m}) appears more than once")
        table[n][m] = _parse_value(raw, mode)
    for n in range(N + 1):
        for m in range(M + 1):
            if table[n][m] is None:
                raise InputError(f"series entry ({n}, {m}) is missing")
    return BivSeries(table)


def save_series_file(path: str, series: BivSeries, name: str = "") -> None:
    doc = {
        "name": name,
        "N": series.N,
        "M": series.M,
        "entries": [
            [n, m, _format_value(series.coeff(n, m))]
            for n in range(series.N + 1)
            for m in range(series.M + 1)
        ],
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=1)
        fh.write("\n")


# ---------------------------------------------------------------------------
# Output helpers
# ---------------------------------------------------------------------------


def _fmt_scalar(v) -> str:
    if isinstance(v, Fraction):
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    return repr(v)


def _fmt_coeffs(coeffs) -> str:
    return "[" + ", ".join(_fmt_scalar(c) for c in coeffs) + "]"


def _poly_coeffs(poly, degree: int):
    return [poly.coeff(i) for i in range(degree + 1)]


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def cmd_uni(args) -> int:
    series = load_series_file(args.series, args.mode)
    n = args.n
    if series.N < 2 * n:
        raise InputError(
            f"series truncated at x^{series.N}; order n={n} requires ({2 * n}, 0)"
        )
    c = series.x_coeffs(0)[: 2 * n + 1]
    build = jacobi_pade if args.algo == "jacobi" else oracle_pade
    pade = build(c, n)
    print(f"A: {_fmt_coeffs(_poly_coeffs(pade.A, n))}  B: {_fmt_coeffs(_poly_coeffs(pade.B, n))}")
    print(f"e: {_fmt_coeffs(pade.e)}")
    return 0


def _build_biv(series: BivSeries, n: int, m: int, side: str, algo: str):
    if side == "left":
        if algo == "recursion":
            return left_pade(series, n, m)
        return oracle_left_pade(series, n, m)
    if algo == "recursion":
        return right_pade(series, n, m)
    inner = oracle_left_pade(series.transpose(), m, n)
    from .bivariate import BivPade

    return BivPade(n=n, m=m, variant="right", A=inner.A, B=inner.B,
                   seeds=inner.seeds, e=inner.e)


def cmd_biv(args) -> int:
    series = load_series_file(args.series, args.mode)
    n, m = args.n, args.m
    try:
        pade = _build_biv(series, n, m, args.side, args.algo)
    except DegenerateTableError as exc:
        raise DegenerateTableError(f"(n={n}, m={m}): {exc}") from exc
    deg = n if args.side == "left" else m
    for p, (A, B) in enumerate(zip(pade.A, pade.B)):
        print(
            f"A[{p}]: {_fmt_coeffs(_poly_coeffs(A, deg))}  "
            f"B[{p}]: {_fmt_coeffs(_poly_coeffs(B, deg))}"
        )
    if args.check:
        other_algo = "oracle" if args.algo == "recursion" else "recursion"
        other = _build_biv(series, n, m, args.side, other_algo)
        if tuple(pade.A) != tuple(other.A) or tuple(pade.B) != tuple(other.B):
            print(
                f"check failed: {args.algo} and {other_algo} disagree at ({n}, {m})",
                file=sys.stderr,
            )
            return EXIT_CHECK
        print("check: recursion and oracle agree")
    return 0


def _parse_problem(args) -> RiccatiProblem:
    try:
        alpha = Fraction(args.alpha)
        beta = Fraction(args.beta)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad alpha/beta: {exc}") from exc
    if beta.denominator == 1:
        raise InputError("beta must be non-integer")
    return RiccatiProblem(alpha, beta)


def _row_cells(row) -> List[object]:
    def t(v):
        return "?" if v is None else round(v, 6)

    def e(v):
        return "?" if v is None else v

    return [row.n, e(row.err_left), e(row.err_right), t(row.time_general), t(row.time_refined)]


def cmd_riccati(args) -> int:
    prob = _parse_problem(args)
    if args.nmax < 1:
        raise InputError("--nmax must be >= 1")
    ref = exact_c01_mp(prob)
    ns = list(range(1, args.nmax + 1))
    if args.jobs > 1:
        with multiprocessing.get_context("fork").Pool(args.jobs) as pool:
            rows = pool.starmap(
                error_table_row,
                [(prob, n, args.timeout_secs, 80, ref) for n in ns],
            )
    else:
        rows = [error_table_row(prob, n, args.timeout_secs, 80, ref) for n in ns]

    if args.format == "csv":
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for row in rows:
            writer.writerow(_row_cells(row))
        sys.stdout.write(out.getvalue())
    elif args.format == "json":
        payload = [
            {key: (None if cell == "?" else cell) for key, cell in zip(CSV_HEADER, _row_cells(row))}
            for row in rows
        ]
        print(json.dumps(payload, indent=1))
    else:
        print(f"{'n':>3} {'err_left':>13} {'err_right':>13} {'t_general':>10} {'t_refined':>10}")
        for row in rows:
            cells = _row_cells(row)
            err_l = cells[1] if cells[1] == "?" else f"{cells[1]:.3e}"
            err_r = cells[2] if cells[2] == "?" else f"{cells[2]:.3e}"
            print(f"{row.n:>3} {err_l:>13} {err_r:>13} {cells[3]:>10} {cells[4]:>10}")
            if row.note:
                print(f"    note: {row.note}")
    return 0


def _median_time(fn, repeats: int) -> float:
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return statistics.median(times)


def cmd_bench(args) -> int:
    prob = _parse_problem(args)
    n = args.nmax
    if n < 1:
        raise InputError("--nmax must be >= 1")
    r = args.repeats
    if r < 1:
        raise InputError("--repeats must be >= 1")
    from .riccati import generate_series

    c0 = generate_series(prob, Fraction(0), 2 * n, 0).x_coeffs(0)
    result = {
        "n": n,
        "repeats": r,
        "univariate": {
            "algorithm1": _median_time(lambda: jacobi_pade(c0, n), r),
            "algorithm2": _median_time(lambda: jacobi_explicit_pade(prob, n, c0), r),
            "algorithm3": _median_time(lambda: direct_coeff_ratios(prob, n, c0), r),
        },
        "left": {
            "general": _median_time(lambda: estimate_c01(prob, n, "left", "general"), r),
            "refined": _median_time(lambda: estimate_c01(prob, n, "left", "refined"), r),
        },
        "right": {
            "general": _median_time(lambda: estimate_c01(prob, n, "right", "general"), r),
            "refined": _median_time(lambda: estimate_c01(prob, n, "right", "refined"), r),
        },
    }
    print(json.dumps(result, indent=1))
    return 0


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    default_mode = os.environ.get("PADE_MODE", "exact")
    if default_mode not in ("exact", "float"):
        default_mode = "exact"
    parser = argparse.ArgumentParser(
        prog="bipade",
        description="Recursive univariate and rectangular bivariate Pade approximants",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_uni = sub.add_parser("uni", help="univariate [n/n] approximant of a series file")
    p_uni.add_argument("series", help="series JSON file")
    p_uni.add_argument("n", type=int)
    p_uni.add_argument("--algo", choices=["jacobi", "oracle"], default="jacobi")
    p_uni.add_argument("--mode", choices=["exact", "float"], default=default_mode)
    p_uni.set_defaults(func=cmd_uni)

    p_biv = sub.add_parser("biv", help="bivariate left/right-(n, m) approximant")
    p_biv.add_argument("series", help="series JSON file")
    p_biv.add_argument("n", type=int)
    p_biv.add_argument("m", type=int)
    p_biv.add_argument("--side", choices=["left", "right"], default="left")
    p_biv.add_argument("--algo", choices=["recursion", "oracle"], default="recursion")
    p_biv.add_argument("--mode", choices=["exact", "float"], default=default_mode)
    p_biv.add_argument("--check", action="store_true",
                       help="also run the other algorithm and compare")
    p_biv.set_defaults(func=cmd_biv)

    p_ric = sub.add_parser("riccati", help="Riccati error/timing table")
    p_ric.add_argument("--alpha", default="1")
    p_ric.add_argument("--beta", default="1/2")
    p_ric.add_argument("--nmax", type=int, default=10)
    p_ric.add_argument("--timeout-secs", type=float, default=60.0)
    p_ric.add_argument("--format", choices=["table", "csv", "json"], default="table")
    p_ric.add_argument("--jobs", type=int, default=1)
    p_ric.set_defaults(func=cmd_riccati)

    p_bench = sub.add_parser("bench", help="algorithm timing comparison")
    p_bench.add_argument("--alpha", default="1")
    p_bench.add_argument("--beta", default="1/2")
    p_bench.add_argument("--nmax", type=int, default=10)
    p_bench.add_argument("--repeats", type=int, default=3)
    p_bench.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DegenerateTableError as exc:
        print(f"degeneracy: {exc}", file=sys.stderr)
        return EXIT_DEGENERACY
    except PadeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
