"""Command-line interface.

Exit codes: 0 success, 1 malformed input, 2 a report carries a
HypothesisViolated verdict, 3 data ambiguity (overlapping supports, gap
failure, or a possibly isomorphic braid pair).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import product

from . import cy_hypersurface, k_theory, ks_braid, serre_entropy, twist_entropy
from .errors import (
    AmbiguousConnectingMap,
    BraidWordError,
    GapConditionFails,
    InconsistentInput,
    MissingAmbientHypothesis,
    PossiblyIsomorphicPair,
)
from .graded_space import GradedDim
from .laurent_poly import Laurent1
from .serre_entropy import EntropyValue
from .twist_entropy import EntropyProfile, Piece, Slope

SCHEMA_VERSION = 1
WORKERS_ENV = "CATENT_WORKERS"
SCAN_HEADER = ["n", "m", "d", "N", "dimV", "lambda", "verdict", "h0", "log_rho", "error"]
PROFILE_HEADER = ["t", "lower", "upper", "exact"]

EXIT_OK, EXIT_USAGE, EXIT_HYPOTHESIS, EXIT_AMBIGUOUS = 0, 1, 2, 3


def fmt_float(x: float) -> str:
    if math.isinf(x):
        return "+inf" if x > 0 else "-inf"
    return f"{x + 0.0:.12g}"


def _round(x: float) -> float:
    return float(f"{x:.12g}") + 0.0


def _endpoint(x: float) -> str:
    if math.isinf(x):
        return "+inf" if x > 0 else "-inf"
    return fmt_float(x)


def jsonable(obj):
    """Convert report objects into plain JSON data with stable rendering."""
    if isinstance(obj, EntropyValue):
        return {"a": obj.a, "b": obj.b, "exact": obj.exact(), "value": _round(obj.approx)}
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, (Laurent1, GradedDim)):
        return str(obj)
    if isinstance(obj, float):
        return _endpoint(obj) if math.isinf(obj) else _round(obj)
    if isinstance(obj, Slope):
        return {"value": jsonable(obj.value), "status": obj.status.value}
    if isinstance(obj, Piece):
        return {
            "interval": [_endpoint(obj.lo), _endpoint(obj.hi)],
            "kind": obj.kind.value,
            "slope": jsonable(obj.slope),
            "lower_slope": jsonable(obj.lower_slope),
            "upper_slope": jsonable(obj.upper_slope),
            "upper_offset": jsonable(obj.upper_offset),
        }
    if isinstance(obj, EntropyProfile):
        return {
            "h0": jsonable(obj.h0),
            "tau_minus": jsonable(obj.tau_minus),
            "tau_plus": jsonable(obj.tau_plus),
            "pieces": [jsonable(p) for p in obj.pieces],
        }
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    return obj


def dump_json(payload: dict) -> str:
    return json.dumps({"schema_version": SCHEMA_VERSION, **jsonable(payload)}, sort_keys=True, indent=2)


def render_human(payload, indent: int = 0) -> str:
    lines = []
    pad = "  " * indent
    for key, value in jsonable(payload).items():
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            lines.append(render_human(value, indent + 1))
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{pad}{key}:")
            for item in value:
                lines.append(render_human(item, indent + 1))
                lines.append(f"{pad}  --")
        else:
            lines.append(f"{pad}{key}: {value}")
    return "\n".join(lines)


def render_csv(header: list[str], rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=header, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: row.get(k, "") for k in header})
    return buf.getvalue()


# -- scans ---------------------------------------------------------------------


def parse_range(text: str) -> list[int]:
    """Inclusive "a:b" (empty when a > b) or a single integer.

    Ranges starting with a minus sign must be attached with "=", e.g. --lambda-range=-4:4.
    """
    try:
        if ":" in text:
            lo, hi = text.split(":", 1)
            return list(range(int(lo), int(hi) + 1))
        return [int(text)]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or a range a:b, got {text!r}") from None


def _scan_nm_row(nm: tuple[int, int]) -> dict:
    n, m = nm
    row = {"n": n, "m": m}
    try:
        r = cy_hypersurface.build_kt_example(n, m)
    except (ValueError, AmbiguousConnectingMap) as exc:
        row["error"] = f"{type(exc).__name__}: {exc}"
        return row
    row.update(
        d=r.d, N=r.N, dimV=r.dimV, **{"lambda": r.lam}, verdict=r.kt.verdict.value, case_label=r.case_label,
        h0=fmt_float(r.kt.h0.approx), log_rho=fmt_float(r.kt.log_rho.approx),
    )
    return row


def _scan_kt_row(point: tuple[int, int, int]) -> dict:
    dimV, lam, d = point
    row = {"d": d, "dimV": dimV, "lambda": lam}
    try:
        r = k_theory.kt_verdict(dimV, lam, d)
    except ValueError as exc:
        row["error"] = f"{type(exc).__name__}: {exc}"
        return row
    row.update(verdict=r.verdict.value, h0=fmt_float(r.h0.approx), log_rho=fmt_float(r.log_rho.approx))
    return row


def scan_rows(grid: str, points: list, workers: int | None = None) -> list[dict]:
    """Evaluate a grid in lexicographic order; row order does not depend on ``workers``."""
    fn = _scan_nm_row if grid == "nm" else _scan_kt_row
    if workers is None:
        workers = int(os.environ.get(WORKERS_ENV, "1") or 1)
    if workers <= 1 or len(points) < 2:
        return [fn(p) for p in points]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, points, chunksize=max(1, len(points) // (4 * workers))))


def profile_rows(profile: EntropyProfile, t_min: float, t_max: float, step: float) -> list[dict]:
    if not t_min < t_max:
        raise ValueError("t_min must be < t_max")
    if not step > 0:
        raise ValueError("step must be > 0")
    count = int(math.floor((t_max - t_min) / step + 1e-9))
    rows = []
    for k in range(count + 1):
        t = _round(t_min + k * step)
        lower, upper, exact = profile.bounds(t)
        rows.append({"t": fmt_float(t), "lower": fmt_float(lower), "upper": fmt_float(upper),
                     "exact": "true" if exact else "false"})
    return rows


# -- argument parsing ------------------------------------------------------------


class UsageError(Exception):
    def __init__(self, message: str, parser: argparse.ArgumentParser):
        super().__init__(message)
        self.parser = parser


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message, self)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="catent", description="Entropy of compositions of spherical twists.")
    parser.add_argument("--format", choices=["human", "json", "csv"], default=None)
    parser.add_argument("--output", "-o", help="write the rendered report to this path")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser, required=True)

    p = sub.add_parser("entropy", help="t -> h_t profile of T2 o T1 (or of one twist)")
    p.add_argument("--dimv", type=int, help="dim V = total dim of Hom^*(E2, E1)")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--w", type=int, default=0, help="max V - min V")
    p.add_argument("--orthogonal", action="store_true", help="common orthogonal of E1, E2 is nonzero")
    p.add_argument("--ambient", action="store_true", help="ambient is D(A)^c for A smooth and compact")
    p.add_argument("--single", action="store_true", help="profile of a single twist T_E instead")

    p = sub.add_parser("serre", help="h0 of the Serre functor of k + k + W")
    p.add_argument("--n", type=int, required=True, help="dim W")
    p.add_argument("--m-max", type=int, default=10)

    p = sub.add_parser("kt", help="Kikuta-Takahashi verdict from dim V and chi")
    p.add_argument("--dimv", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=int, required=True, help="chi([E2],[E1])")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--dependent", action="store_true", help="[E1], [E2] are linearly dependent in K_num")

    p = sub.add_parser("cy", help="hypersurface example in P^n x P^m")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)

    p = sub.add_parser("braid", help="Hom between reachable spherical objects of the A2 Ginzburg category")
    p.add_argument("--word", default="", help='braid word for the first object, e.g. "s1 S2" or "12\'"')
    p.add_argument("--i", type=int, choices=[1, 2], required=True)
    p.add_argument("--word2", default="")
    p.add_argument("--j", type=int, choices=[1, 2], required=True)
    p.add_argument("--d", type=int, required=True)

    p = sub.add_parser("scan", help="CSV table over a parameter grid")
    p.add_argument("--grid", choices=["nm", "kt"], default="nm")
    p.add_argument("--n-range", type=parse_range, default=[])
    p.add_argument("--m-range", type=parse_range, default=[])
    p.add_argument("--dimv-range", type=parse_range, default=[])
    p.add_argument("--lambda-range", type=parse_range, default=[])
    p.add_argument("--d-range", type=parse_range, default=[])
    p.add_argument("--workers", type=int, default=None, help=f"defaults to ${WORKERS_ENV} or 1")

    p = sub.add_parser("profile-csv", help="sample an entropy profile on a t grid")
    p.add_argument("--dimv", type=int, help="omit with --single")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--w", type=int, default=0)
    p.add_argument("--orthogonal", action="store_true")
    p.add_argument("--ambient", action="store_true")
    p.add_argument("--single", action="store_true")
    p.add_argument("--t-min", type=float, default=-1.0)
    p.add_argument("--t-max", type=float, default=1.0)
    p.add_argument("--step", type=float, default=0.5)
    return parser


def _profile_from_args(args) -> EntropyProfile:
    if args.single:
        return twist_entropy.spherical_twist_profile(args.d, args.orthogonal)
    if args.dimv is None:
        raise ValueError("--dimv is required unless --single is given")
    return twist_entropy.entropy_profile(args.dimv, args.d, args.w, args.orthogonal, args.ambient)


@dataclass
class Result:
    payload: dict | None = None
    header: list | None = None
    rows: list | None = None
    code: int = EXIT_OK


def _dispatch(args) -> Result:
    cmd = args.command
    if cmd == "entropy":
        profile = _profile_from_args(args)
        return Result({"command": cmd, "d": args.d, "dimV": args.dimv, "w": args.w,
                       "single": args.single, "profile": profile})
    if cmd == "serre":
        h0 = serre_entropy.h0_serre(args.n)
        sol = serre_entropy.solve_recurrence(args.n)
        return Result({
            "command": cmd, "N": args.n, "h0": h0,
            "sigma_plus": sol.sigma_plus, "sigma_minus": sol.sigma_minus,
            "dims": [str(x) for x in serre_entropy.recurrence_dims(args.n, args.m_max)],
        })
    if cmd == "kt":
        r = k_theory.kt_verdict(args.dimv, args.lam, args.d, not args.dependent)
        code = EXIT_HYPOTHESIS if r.verdict is k_theory.Verdict.HYPOTHESIS_VIOLATED else EXIT_OK
        return Result({"command": cmd, **r.to_dict()}, code=code)
    if cmd == "cy":
        r = cy_hypersurface.build_kt_example(args.n, args.m)
        code = EXIT_HYPOTHESIS if r.kt.verdict is k_theory.Verdict.HYPOTHESIS_VIOLATED else EXIT_OK
        return Result({"command": cmd, **r.to_dict()}, code=code)
    if cmd == "braid":
        r = ks_braid.reachable_pair_report(args.word, args.i, args.word2, args.j, args.d)
        code = EXIT_HYPOTHESIS if r.kt.verdict is k_theory.Verdict.HYPOTHESIS_VIOLATED else EXIT_OK
        return Result({"command": cmd, **r.to_dict()}, code=code)
    if cmd == "scan":
        if args.grid == "nm":
            points = list(product(args.n_range, args.m_range))
        else:
            points = list(product(args.dimv_range, args.lambda_range, args.d_range))
        rows = scan_rows(args.grid, points, args.workers)
        return Result({"command": cmd, "grid": args.grid, "rows": rows}, SCAN_HEADER, rows)
    if cmd == "profile-csv":
        profile = _profile_from_args(args)
        rows = profile_rows(profile, args.t_min, args.t_max, args.step)
        return Result({"command": cmd, "rows": rows}, PROFILE_HEADER, rows)
    raise AssertionError(cmd)


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"error: {exc}", file=stderr)
        print(exc.parser.format_help(), file=stderr)
        return EXIT_USAGE

    try:
        result = _dispatch(args)
    except (AmbiguousConnectingMap, GapConditionFails, PossiblyIsomorphicPair) as exc:
        print(f"{type(exc).__name__}: {exc}", file=stderr)
        return EXIT_AMBIGUOUS
    except (ValueError, InconsistentInput, MissingAmbientHypothesis, BraidWordError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=stderr)
        sub = parser._subparsers._group_actions[0].choices[args.command]
        print(sub.format_help(), file=stderr)
        return EXIT_USAGE

    fmt = args.format or ("csv" if result.rows is not None else "json")
    if fmt == "csv":
        if result.rows is None:
            print(f"error: {args.command} has no CSV form; use --format json or human", file=stderr)
            return EXIT_USAGE
        text = render_csv(result.header, result.rows)
    elif fmt == "json":
        text = dump_json(result.payload) + "\n"
    else:
        text = render_human(result.payload) + "\n"

    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return result.code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
