"""Command-line entry point (``aperiodic-degree``).

Exit codes: 0 success, 2 usage error, 3 data error, 4 degenerate
computation (empty window, singular fit).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path
from typing import Sequence

from . import a2
from .io import PatchFormatError, compat_quad_dump, dumps_patch, read_patch, render_svg
from .regression import (
    PUBLISHED_PAIRS,
    SingularFitError,
    difference_pairs,
    fit_ols,
    read_series,
)
from .ring import Family
from .substitution import GenerationLimitError, Patch, generate, generate_series, parse_kind
from .tilegraph import DegreeModel, DegreeSummary, Measure, WindowMode, build_graph, central_window, summarize

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DATA = 3
EXIT_DEGENERATE = 4


class UsageError(Exception):
    pass


class DegenerateError(Exception):
    pass


def _fmt(x: float | None) -> str:
    return "" if x is None else f"{x:.6f}"


def _parse_int_list(text: str) -> list[int]:
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if ".." in part or "-" in part[1:]:
            lo, hi = part.split("..") if ".." in part else part.split("-", 1)
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    if not out:
        raise UsageError(f"empty list {text!r}")
    return out


def _emit(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


# ---------------------------------------------------------------------------
# stats helpers
# ---------------------------------------------------------------------------


def patch_summary(p: Patch, window: str, measure: str | None = None, model: str = "planar") -> DegreeSummary:
    mode = WindowMode(window)
    if measure is None:
        measure = "corners" if mode is WindowMode.COMPAT else "degree"
    g = build_graph(p, DegreeModel(model))
    return summarize(g, central_window(g, mode), Measure(measure))


def _summary_record(gen: int, s: DegreeSummary) -> dict:
    return {
        "generation": gen,
        "V": s.V,
        "T": s.T,
        "avg": s.average_float,
        "histogram": {str(k): v for k, v in s.histogram.items()},
        "window": s.window.value,
        "measure": s.measure.value,
        "empty": s.empty,
    }


def _csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["generation", "V", "T", "avg"])
    for r in rows:
        w.writerow([r["generation"], r["V"], r["T"], _fmt(r["avg"])])
    return buf.getvalue()


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_generate(args: argparse.Namespace) -> int:
    try:
        parse_kind(args.family, args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.gen < 0:
        raise UsageError("--gen must be non-negative")
    p = generate(args.family, args.seed, args.gen, orientation=args.orientation)
    _emit(dumps_patch(p), args.out)
    return EXIT_OK


def cmd_stats(args: argparse.Namespace) -> int:
    p = read_patch(args.patch)
    s = patch_summary(p, args.window, args.measure, args.model)
    rec = _summary_record(p.generation, s)
    if args.format == "json":
        _emit(json.dumps(rec, sort_keys=True) + "\n", None)
    else:
        _emit(_csv([rec]), None)
    if s.empty:
        print("empty window: no vertices to average", file=sys.stderr)
        return EXIT_DEGENERATE
    return EXIT_OK


def cmd_series(args: argparse.Namespace) -> int:
    try:
        parse_kind(args.family, args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    patches = generate_series(args.family, args.seed, args.max_gen, orientation=args.orientation)
    rows = []
    for p in patches[args.min_gen:]:
        rows.append(_summary_record(p.generation, patch_summary(p, args.window, args.measure, args.model)))
    _emit(_csv(rows), args.out)
    return EXIT_OK


def cmd_a2(args: argparse.Namespace) -> int:
    if args.limit:
        print(repr(a2.limit_avg_degree()))
        return EXIT_OK
    ks = _parse_int_list(args.k_range)
    if min(ks) < 1:
        raise UsageError("k must be >= 1")
    rows = [{"generation": k, "V": a2.v_count(k), "T": a2.t_count(k)} for k in ks]
    for r in rows:
        r["avg"] = r["T"] / r["V"]
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["k", "V", "T", "avg"])
    for r in rows:
        w.writerow([r["generation"], r["V"], r["T"], _fmt(r["avg"])])
    _emit(buf.getvalue(), None)
    return EXIT_OK


def cmd_extrapolate(args: argparse.Namespace) -> int:
    if args.published:
        if args.published not in PUBLISHED_PAIRS:
            raise UsageError(f"unknown published table {args.published!r}; choose from {sorted(PUBLISHED_PAIRS)}")
        pairs = PUBLISHED_PAIRS[args.published]
    else:
        if args.series is None:
            raise UsageError("give a series file or --published NAME")
        s = read_series(args.series)
        gens = _parse_int_list(args.use_generations) if args.use_generations else None
        pairs = difference_pairs(s, args.start, gens)
    fit = fit_ols(pairs)
    out = {
        "slope": round(fit.slope, 6),
        "intercept": round(fit.intercept, 6),
        "limit": round(fit.intercept, 6),
        "points": fit.point_count,
        "rss": fit.residual_sum_squares,
    }
    print(json.dumps(out, sort_keys=True))
    return EXIT_OK


def cmd_render_svg(args: argparse.Namespace) -> int:
    p = read_patch(args.patch)
    _emit(render_svg(p, stroke=args.stroke, fill_by_kind=args.fill_by_kind), args.out)
    return EXIT_OK


def cmd_dump(args: argparse.Namespace) -> int:
    if not args.compat_quad:
        raise UsageError("choose a dump format (--compat-quad)")
    p = read_patch(args.patch)
    if p.family is Family.A2:
        raise UsageError("the compat quad dump needs 4-corner tiles; A2 patches have hexagons")
    _emit(compat_quad_dump(p), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="aperiodic-degree", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def family_arg(text: str) -> Family:
        try:
            return Family.parse(text)
        except ValueError as exc:
            raise argparse.ArgumentTypeError(str(exc)) from None

    g = sub.add_parser("generate", help="write a substitution patch as exact JSON")
    g.add_argument("--family", required=True, type=family_arg, help="PKD, PR, AB or A2 (any case)")
    g.add_argument("--seed", required=True, help="seed tile kind (prefix match, e.g. kite, small)")
    g.add_argument("--gen", type=int, required=True)
    g.add_argument("--orientation", choices=["reference", "prototile"], default="reference")
    g.add_argument("-o", "--out")
    g.set_defaults(func=cmd_generate)

    window_choices = [m.value for m in WindowMode]
    s = sub.add_parser("stats", help="degree statistics of a patch file")
    s.add_argument("patch")
    s.add_argument("--window", choices=window_choices, default="full")
    s.add_argument("--measure", choices=[m.value for m in Measure], help="default: corners for compat, else degree")
    s.add_argument("--model", choices=[m.value for m in DegreeModel], default="planar")
    s.add_argument("--format", choices=["json", "csv"], default="json")
    s.set_defaults(func=cmd_stats)

    r = sub.add_parser("series", help="CSV statistics for a range of generations")
    r.add_argument("--family", required=True, type=family_arg, help="PKD, PR, AB or A2 (any case)")
    r.add_argument("--seed", required=True)
    r.add_argument("--max-gen", type=int, required=True)
    r.add_argument("--min-gen", type=int, default=1)
    r.add_argument("--window", choices=window_choices, default="compat")
    r.add_argument("--measure", choices=[m.value for m in Measure])
    r.add_argument("--model", choices=[m.value for m in DegreeModel], default="planar")
    r.add_argument("--orientation", choices=["reference", "prototile"], default="reference")
    r.add_argument("-o", "--out")
    r.set_defaults(func=cmd_series)

    a = sub.add_parser("a2", help="closed-form A2 counts")
    grp = a.add_mutually_exclusive_group(required=True)
    grp.add_argument("--k-range", help="e.g. 1..6 or 1,2,9")
    grp.add_argument("--limit", action="store_true", help="print the limiting average degree")
    a.set_defaults(func=cmd_a2)

    e = sub.add_parser("extrapolate", help="least-squares limit estimate from a degree series")
    e.add_argument("series", nargs="?")
    e.add_argument("--start", type=int)
    e.add_argument("--use-generations", help="comma list or range of n whose pairs are fitted")
    e.add_argument("--published", help="fit one of the built-in published pair tables")
    e.set_defaults(func=cmd_extrapolate)

    v = sub.add_parser("render-svg", help="draw a patch file")
    v.add_argument("patch")
    v.add_argument("out", nargs="?")
    v.add_argument("--stroke", default="#222222")
    v.add_argument("--fill-by-kind", action=argparse.BooleanOptionalAction, default=True)
    v.set_defaults(func=cmd_render_svg)

    d = sub.add_parser("dump", help="export corner coordinates")
    d.add_argument("patch")
    d.add_argument("--compat-quad", action="store_true", help="x y per corner, 4 lines per tile, '0 0' terminator")
    d.add_argument("-o", "--out")
    d.set_defaults(func=cmd_dump)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, GenerationLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SingularFitError, DegenerateError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except (PatchFormatError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
