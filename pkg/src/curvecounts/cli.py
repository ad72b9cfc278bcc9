"""Command-line front end.

Commands:

    nd D            N_d for 1 <= d <= D
    triple D        triple-point counts for 3 <= d <= D
    genus2 D        genus-2 fixed-structure counts for 4 <= d <= D
    breakdown D     genus-2 degeneration breakdown rows for 4 <= d <= D
    gterm G D       leading higher-genus term for the pair (G, D)
    verify D        run every named identity up to D, report PASS/FAIL

Counts are serialized as decimal strings in JSON (they overflow doubles by
d ~ 10).  Exit status: 0 on success, 1 on verification failure or cache
errors, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from datetime import datetime, timezone
from fractions import Fraction
from pathlib import Path
from typing import IO, Optional, Sequence

from .exactnum import IntegralityError
from .kontsevich import (
    CurveCountTable,
    TableInvariantError,
    TableParseError,
    load_table,
    rational_counts,
    save_table,
)
from .picard import triple_point_curve_count
from .genus import genus2_breakdown, genus2_count, leading_genus_term
from .verify import run_verification

__all__ = ["RunConfig", "UsageError", "main", "parse_args", "run"]

Row = tuple[object, ...]


class UsageError(ValueError):
    """Bad command-line arguments (maps to exit status 2)."""


@dataclass(frozen=True)
class RunConfig:
    command: str
    output_format: str = "text"
    cache_path: Optional[Path] = None
    header: bool = True
    d_max: Optional[int] = None
    g: Optional[int] = None
    d: Optional[int] = None

    def __post_init__(self) -> None:
        if self.command in ("nd", "triple", "genus2", "breakdown", "verify"):
            assert self.d_max is not None
            if self.d_max < 1:
                raise UsageError(f"D must be >= 1, got {self.d_max}")
            if self.command in ("genus2", "breakdown") and self.d_max < 4:
                raise UsageError(f"{self.command} needs D >= 4, got {self.d_max}")
        elif self.command == "gterm":
            assert self.g is not None and self.d is not None
            if self.g < 2:
                raise UsageError(f"G must be >= 2, got {self.g}")
            if self.d < 2 * (self.g - 1):
                raise UsageError(
                    f"gterm needs D >= 2(G-1) = {2 * (self.g - 1)}, got {self.d}"
                )
        else:
            raise UsageError(f"unknown command {self.command!r}")


def parse_args(argv: Optional[Sequence[str]] = None) -> RunConfig:
    def add_common(target: argparse.ArgumentParser, suppress: bool) -> None:
        # Subparser copies use SUPPRESS so their defaults never clobber
        # values already parsed by the top-level parser; flags therefore
        # work both before and after the subcommand.
        fmt_default = argparse.SUPPRESS if suppress else "text"
        opt_default = argparse.SUPPRESS if suppress else None
        flag_default = argparse.SUPPRESS if suppress else False
        target.add_argument("--format", choices=("text", "json", "csv"),
                            default=fmt_default)
        target.add_argument("--cache", type=Path, default=opt_default, metavar="PATH",
                            help="read/write the rational-count table at PATH")
        target.add_argument("--no-header", action="store_true", default=flag_default,
                            help="omit the timestamp header line (text/csv)")

    parser = argparse.ArgumentParser(
        prog="curvecounts",
        description="Exact counts of plane curves: rational, triple-point, genus-2.",
    )
    add_common(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("nd", "triple", "genus2", "breakdown", "verify"):
        p = sub.add_parser(name)
        add_common(p, suppress=True)
        p.add_argument("d_max", type=int, metavar="D")
    p = sub.add_parser("gterm")
    add_common(p, suppress=True)
    p.add_argument("g", type=int, metavar="G")
    p.add_argument("d", type=int, metavar="D")

    ns = parser.parse_args(argv)
    return RunConfig(
        command=ns.command,
        output_format=ns.format,
        cache_path=ns.cache,
        header=not ns.no_header,
        d_max=getattr(ns, "d_max", None),
        g=getattr(ns, "g", None),
        d=getattr(ns, "d", None),
    )


def _counts_for(d_needed: int, cache_path: Optional[Path]) -> CurveCountTable:
    """Compute the table, honoring (and refreshing) the on-disk cache."""
    if cache_path is not None and cache_path.exists():
        table = load_table(cache_path)
        if table.d_max >= d_needed:
            return table
    table = rational_counts(d_needed)
    if cache_path is not None:
        save_table(table, cache_path)
    return table


def _cell(value: object) -> str:
    return str(value) if value is not None else ""


def _emit(columns: Sequence[str], rows: Sequence[Row], config: RunConfig, out: IO[str]) -> None:
    fmt = config.output_format
    if fmt == "json":
        for row in rows:
            out.write(json.dumps(dict(zip(columns, row)), separators=(",", ":")) + "\n")
        return
    if config.header:
        stamp = datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")
        out.write(f"# generated {stamp}\n")
    sep = "," if fmt == "csv" else "\t"
    out.write(sep.join(columns) + "\n")
    for row in rows:
        out.write(sep.join(_cell(v) for v in row) + "\n")


def _frac(value: Fraction) -> str:
    # str(Fraction) is "p/q", or "p" when integral: exact and compact.
    return str(value)


def run(config: RunConfig, out: IO[str]) -> int:
    """Execute one invocation, writing the report to `out`."""
    cmd = config.command
    if cmd == "gterm":
        counts = _counts_for(config.d, config.cache_path)
        value = leading_genus_term(config.g, config.d, counts)
        _emit(("g", "d", "term"), [(config.g, config.d, str(value))], config, out)
        return 0

    if cmd == "verify":
        counts = _counts_for(config.d_max, config.cache_path)
        results = run_verification(config.d_max, counts)
        if config.output_format == "text":
            if config.header:
                stamp = datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")
                out.write(f"# generated {stamp}\n")
            for result in results:
                out.write(result.describe() + "\n")
        else:
            rows = [
                (r.name, "PASS" if r.passed else "FAIL", r.first_failure)
                for r in results
            ]
            _emit(("identity", "status", "first_failing_d"), rows, config, out)
        return 0 if all(r.passed for r in results) else 1

    counts = _counts_for(config.d_max, config.cache_path)
    if cmd == "nd":
        rows: list[Row] = [(d, str(counts[d])) for d in range(1, config.d_max + 1)]
        _emit(("d", "N"), rows, config, out)
    elif cmd == "triple":
        rows = [
            (d, str(triple_point_curve_count(d, counts)))
            for d in range(3, config.d_max + 1)
        ]
        _emit(("d", "Ntriple"), rows, config, out)
    elif cmd == "genus2":
        rows = [(d, str(genus2_count(d, counts))) for d in range(4, config.d_max + 1)]
        _emit(("d", "N2"), rows, config, out)
    elif cmd == "breakdown":
        rows = []
        for d in range(4, config.d_max + 1):
            b = genus2_breakdown(d, counts)
            rows.append(
                (d, _frac(b.case_i), _frac(b.case_ii), _frac(b.moduli_intersection),
                 b.aut_c0, b.aut_generic, str(b.total))
            )
        _emit(
            ("d", "case_i", "case_ii", "moduli", "aut_c0", "aut_generic", "N2"),
            rows, config, out,
        )
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        config = parse_args(argv)
    except UsageError as exc:
        print(f"curvecounts: error: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:
        code = exc.code
        if code is None:
            return 0
        return code if isinstance(code, int) else 2
    try:
        return run(config, sys.stdout)
    except (TableParseError, TableInvariantError, IntegralityError, OSError) as exc:
        print(f"curvecounts: error: {exc}", file=sys.stderr)
        return 1
