"""Command-line interface: ``count``, ``verify``, ``sweep`` and ``render``.

Exit codes: 0 success, 1 verification mismatch, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import IO, Iterable, Sequence

from billiards.counting import CountReport, formula_report
from billiards.grid import NormalizedGrid, TableSpec, normalize
from billiards.oracle import oracle_report
from billiards.render import Format, RenderOptions, render, scaled_options
from billiards.trajectory import billiard_trajectory

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2

SWEEP_HEADER = (
    "p", "q", "atomic_formula", "atomic_oracle", "molecular_formula",
    "molecular_summed", "molecular_oracle", "match",
)

CORRECTION_NOTE = (
    "note: when both placement counts P, Q are odd the m x n count is "
    "(P*Q+1)/2 for even m and (P*Q-1)/2 for odd m"
)


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class SweepSpec:
    max_side: int
    parallelism: int = 1
    require_coprime_only: bool = True

    def __post_init__(self) -> None:
        if self.max_side < 1:
            raise ValueError(f"max_side must be at least 1, got {self.max_side}")
        if self.parallelism < 1:
            raise ValueError(f"parallelism must be at least 1, got {self.parallelism}")
        if not self.require_coprime_only:
            raise ValueError("sweeps only cover coprime pairs")

    def pairs(self) -> list[tuple[int, int]]:
        return [
            (p, q)
            for p in range(1, self.max_side + 1)
            for q in range(1, p + 1)
            if math.gcd(p, q) == 1
        ]


@dataclass(frozen=True)
class SweepRow:
    p: int
    q: int
    atomic_formula: int
    atomic_oracle: int
    molecular_formula: int
    molecular_summed: int
    molecular_oracle: int
    match: bool

    def as_csv(self) -> list[str]:
        values = [str(getattr(self, name)) for name in SWEEP_HEADER[:-1]]
        return values + ["true" if self.match else "false"]


def sweep_row(pair: tuple[int, int]) -> SweepRow:
    report = oracle_report(NormalizedGrid(*pair))
    return SweepRow(
        pair[0],
        pair[1],
        report.atomic_formula,
        report.atomic_oracle,
        report.molecular_total_formula,
        report.molecular_total_summed,
        report.molecular_oracle,
        bool(report.all_match),
    )


def run_sweep(spec: SweepSpec) -> list[SweepRow]:
    """Oracle-check every coprime ``q <= p <= max_side``; rows sorted by ``(p, q)``."""
    pairs = spec.pairs()
    if spec.parallelism == 1:
        rows = [sweep_row(pair) for pair in pairs]
    else:
        # biggest grids first so no worker is left holding the tail
        pairs_by_cost = sorted(pairs, key=lambda pq: pq[0] * pq[1] ** 4, reverse=True)
        with ProcessPoolExecutor(max_workers=spec.parallelism) as pool:
            rows = list(pool.map(sweep_row, pairs_by_cost))
    return sorted(rows, key=lambda row: (row.p, row.q))


def write_sweep_csv(rows: Iterable[SweepRow], stream: IO[str]) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(SWEEP_HEADER)
    for row in rows:
        writer.writerow(row.as_csv())


def format_text(report: CountReport) -> str:
    g = report.grid
    raw = g.raw
    lines = [f"grid: {g.p}x{g.q} (g={g.g}, raw table {raw.a}x{raw.b})"]

    atomic = f"atomic squares: {report.atomic_formula} (raw-unit form {report.atomic_raw})"
    if report.has_oracle:
        atomic += (
            f", oracle {report.atomic_oracle},"
            f" unvisited interior points {report.unvisited_interior}"
        )
    lines.append(atomic)

    header = f"{'m':>4} {'n':>4} {'formula':>8}"
    if report.has_oracle:
        header += f" {'oracle':>8}"
    lines.append(header)
    for cls, counts in sorted(report.per_class.items()):
        line = f"{cls.m:>4} {cls.n:>4} {counts.formula:>8}"
        if report.has_oracle:
            flag = "" if counts.formula == counts.oracle else "  MISMATCH"
            line += f" {counts.oracle:>8}{flag}"
        lines.append(line)

    molecular = (
        f"molecular rectangles: {report.molecular_total_formula}"
        f" (summed over classes {report.molecular_total_summed}"
    )
    if report.has_oracle:
        molecular += f", oracle {report.molecular_oracle}"
    lines.append(molecular + ")")
    lines.append(CORRECTION_NOTE)
    if report.has_oracle:
        lines.append(f"all match: {'yes' if report.all_match else 'NO'}")
    return "\n".join(lines) + "\n"


def _emit(report: CountReport, fmt: str) -> None:
    if fmt == "json":
        sys.stdout.write(json.dumps(report.to_dict(), indent=2) + "\n")
    else:
        sys.stdout.write(format_text(report))


def _grid_from_args(args: argparse.Namespace) -> NormalizedGrid:
    try:
        return normalize(TableSpec(args.a, args.b))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _write_output(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc.strerror or exc}") from exc


def cmd_count(args: argparse.Namespace) -> int:
    _emit(formula_report(_grid_from_args(args)), args.format)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    report = oracle_report(_grid_from_args(args))
    _emit(report, args.format)
    return EXIT_OK if report.all_match else EXIT_MISMATCH


def cmd_sweep(args: argparse.Namespace) -> int:
    try:
        spec = SweepSpec(args.max_side, args.jobs)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.out not in (None, "-"):
        # fail on a bad path before spending time on the sweep
        try:
            open(args.out, "a", encoding="utf-8").close()
        except OSError as exc:
            raise UsageError(f"cannot write {args.out}: {exc.strerror or exc}") from exc

    rows = run_sweep(spec)
    if args.out in (None, "-"):
        write_sweep_csv(rows, sys.stdout)
    else:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            write_sweep_csv(rows, fh)

    bad = [row for row in rows if not row.match]
    for row in bad:
        print(f"mismatch at {row.p}x{row.q}", file=sys.stderr)
    return EXIT_MISMATCH if bad else EXIT_OK


def cmd_render(args: argparse.Namespace) -> int:
    grid = _grid_from_args(args)
    fmt = Format.ASCII if args.ascii else Format.SVG
    try:
        opts = RenderOptions(
            cell_size=args.cell_size,
            show_grid=not args.no_grid,
            highlight_atomic=args.highlight_atomic,
            format=fmt,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if fmt is Format.SVG:
        opts = scaled_options(opts, grid.g)
    _write_output(render(billiard_trajectory(grid), opts), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="billiards",
        description="Count and draw the regions cut out by corner-to-corner billiard paths.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_sides(p: argparse.ArgumentParser) -> None:
        p.add_argument("a", type=int, help="table width in grid units")
        p.add_argument("b", type=int, help="table height in grid units")

    count = sub.add_parser("count", help="closed-form counts for an a x b table")
    add_sides(count)
    count.add_argument("--format", choices=("text", "json"), default="text")
    count.set_defaults(func=cmd_count)

    verify = sub.add_parser("verify", help="compare formulas against brute-force counts")
    add_sides(verify)
    verify.add_argument("--format", choices=("text", "json"), default="text")
    verify.set_defaults(func=cmd_verify)

    sweep = sub.add_parser("sweep", help="verify every coprime q <= p <= N, write CSV")
    sweep.add_argument("--max-side", type=int, required=True)
    sweep.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    sweep.add_argument("--out", default=None, help="CSV path (default: stdout)")
    sweep.set_defaults(func=cmd_sweep)

    draw = sub.add_parser("render", help="draw the trajectory as SVG or ASCII")
    add_sides(draw)
    kind = draw.add_mutually_exclusive_group()
    kind.add_argument("--svg", action="store_true", help="SVG output (default)")
    kind.add_argument("--ascii", action="store_true", help="ASCII raster output")
    draw.add_argument("--cell-size", type=int, default=40, help="SVG pixels per grid unit")
    draw.add_argument("--highlight-atomic", action="store_true")
    draw.add_argument("--no-grid", action="store_true")
    draw.add_argument("--out", default=None, help="output path (default: stdout)")
    draw.set_defaults(func=cmd_render)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"billiards {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())
