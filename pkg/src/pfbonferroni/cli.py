"""Command-line interface.

Subcommands: ``rank``, ``sweep``, ``selfcheck`` and ``validate``.
Exit codes: 0 success, 1 usage error, 2 data or domain error, 3 golden-check failure.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path
from typing import List, Optional

from . import __version__
from .bonferroni import BonferroniParams
from .exceptions import PictureFuzzyError
from .golden import run_golden
from .io import ReportTable, parse_grid, parse_problem, ranking_table, sweep_grids, sweep_table
from .mcdm import rank, sweep_gamma, sweep_pq
from .pfn import format_pfn
from .tnorms import Family, validate_spec

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_GOLDEN = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 by default, which this tool reserves for data errors
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not value > 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text}")
    return value


def _add_tnorm_flags(p: argparse.ArgumentParser, with_gamma: bool = True) -> None:
    p.add_argument("--family", default="hamacher", help="t-norm family (default: hamacher)")
    if with_gamma:
        p.add_argument("--gamma", type=float, default=2.0, help="family parameter (default: 2)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pfbonferroni", description="Picture fuzzy Bonferroni-mean MCDM ranking.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)

    p = sub.add_parser("rank", help="aggregate and rank the alternatives of a problem file")
    p.add_argument("problem", help="problem file (.json or .csv)")
    _add_tnorm_flags(p)
    p.add_argument("--p", type=_positive_float, default=1.0)
    p.add_argument("--q", type=_positive_float, default=1.0)
    p.add_argument("--format", choices=("text", "csv"), default="text")

    s = sub.add_parser("sweep", help="rank over a grid of (p, q) or gamma values and write long-format CSV")
    s.add_argument("problem")
    _add_tnorm_flags(s)
    s.add_argument("--p", type=_positive_float, default=1.0, help="p for a gamma sweep")
    s.add_argument("--q", type=_positive_float, default=1.0, help="q for a gamma sweep")
    s.add_argument("--p-grid", help="start:stop:step or comma list")
    s.add_argument("--q-grid", help="start:stop:step or comma list")
    s.add_argument("--gamma-grid", help="start:stop:step or comma list")
    s.add_argument(
        "--from-file", choices=("pq", "gamma"), help="take the grids for this axis from the problem file's sweep section"
    )
    s.add_argument("--out", help="CSV output path (default: stdout)")

    c = sub.add_parser("selfcheck", help="reproduce the bundled reference results")
    c.add_argument("--format", choices=("text", "csv"), default="text")

    v = sub.add_parser("validate", help="parse a problem file and report its shape")
    v.add_argument("problem")
    return parser


def _write(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8", newline="")


def cmd_rank(args) -> int:
    problem = parse_problem(args.problem)
    spec = validate_spec(args.family, args.gamma)
    result = rank(problem, spec, BonferroniParams(args.p, args.q))
    table = ranking_table(result)
    if args.format == "csv":
        sys.stdout.write(table.to_csv())
        return EXIT_OK
    sys.stdout.write(f"operator: PFINWBM  t-norm: {spec}  p={args.p:g}  q={args.q:g}\n\n")
    sys.stdout.write(table.to_text())
    sys.stdout.write("\n")
    for name, r in zip(result.alternatives, result.aggregated):
        sys.stdout.write(f"{name}: {format_pfn(r)}\n")
    sys.stdout.write(f"\nranking: {result.chain()}\n")
    return EXIT_OK


def _grid(text: Optional[str], flag: str):
    if text is None:
        return None
    try:
        grid = parse_grid(text, flag)
    except PictureFuzzyError as exc:
        raise UsageError(str(exc)) from None
    if not grid:
        raise UsageError(f"{flag}: grid is empty")
    if flag != "--gamma-grid" and any(v <= 0 for v in grid):
        raise UsageError(f"{flag}: values must be positive")
    return grid


def cmd_sweep(args) -> int:
    p_grid = _grid(args.p_grid, "--p-grid")
    q_grid = _grid(args.q_grid, "--q-grid")
    gamma_grid = _grid(args.gamma_grid, "--gamma-grid")
    problem = parse_problem(args.problem)
    if args.from_file:
        if any(g is not None for g in (p_grid, q_grid, gamma_grid)):
            raise UsageError("--from-file cannot be combined with explicit grids")
        grids = sweep_grids(args.problem)
        keys = ("p", "q") if args.from_file == "pq" else ("gamma",)
        missing = [k for k in keys if k not in grids]
        if missing:
            raise UsageError(f"problem file has no sweep grid for {', '.join(missing)}")
        p_grid, q_grid, gamma_grid = (grids.get(k) if k in keys else None for k in ("p", "q", "gamma"))
    pq = p_grid is not None or q_grid is not None
    if pq and gamma_grid is not None:
        raise UsageError("give either --p-grid/--q-grid or --gamma-grid, not both")
    if not pq and gamma_grid is None:
        raise UsageError("one sweep axis is required: --p-grid/--q-grid or --gamma-grid")
    if pq:
        if p_grid is None or q_grid is None:
            raise UsageError("--p-grid and --q-grid must be given together")
        result = sweep_pq(problem, validate_spec(args.family, args.gamma), p_grid, q_grid)
    else:
        result = sweep_gamma(problem, Family.parse(args.family), gamma_grid, BonferroniParams(args.p, args.q))
    _write(sweep_table(result).to_csv(), args.out)
    for row in result.skipped:
        print(f"warning: gamma={row.gamma:g} {row.note}", file=sys.stderr)
    return EXIT_OK


def cmd_selfcheck(args) -> int:
    start = time.perf_counter()
    results = run_golden()
    elapsed = time.perf_counter() - start
    table = ReportTable(["group", "item", "status", "observed", "expected"])
    for r in results:
        table.rows.append([r.group, r.name, "PASS" if r.passed else "FAIL", r.observed, r.expected])
    sys.stdout.write(table.render(args.format))
    failed = sum(not r.passed for r in results)
    if args.format == "text":
        sys.stdout.write(f"\n{len(results) - failed}/{len(results)} golden checks passed in {elapsed:.2f} s\n")
    return EXIT_GOLDEN if failed else EXIT_OK


def cmd_validate(args) -> int:
    problem = parse_problem(args.problem)
    m, n = problem.shape
    kinds = ", ".join(f"{c.name} ({c.orientation.value})" for c in problem.criteria)
    print(f"{args.problem}: valid, {m} alternatives x {n} criteria")
    print(f"criteria: {kinds}")
    print(f"weights: {', '.join(f'{w:g}' for w in problem.weights)}")
    return EXIT_OK


COMMANDS = {"rank": cmd_rank, "sweep": cmd_sweep, "selfcheck": cmd_selfcheck, "validate": cmd_validate}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            parser.print_help(sys.stderr)
            return EXIT_USAGE
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except (PictureFuzzyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
