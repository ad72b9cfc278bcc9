"""Counts of rational plane curves via the quantum-cohomology recursion.

N_d is the number of irreducible, reduced, nodal rational plane curves of
degree d passing through 3d-1 general points.  With N_1 = 1, the recursion
(summed over ordered pairs d1 + d2 = d, d1, d2 >= 1) is

    N_d = sum N_{d1} N_{d2} [ d1^2 d2^2 C(3d-4, 3d1-2)
                              - d1^3 d2 C(3d-4, 3d1-1) ].

Every downstream count consumes the resulting table, so the table is built
eagerly, validated, and can be persisted in a line-oriented decimal text
format (values overflow 64-bit machine words by d ~ 10).
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .exactnum import binomial

__all__ = [
    "CurveCountTable",
    "TableInvariantError",
    "TableParseError",
    "load_table",
    "rational_counts",
    "save_table",
]

FORMAT_HEADER = "curvecount-table v1"


class TableParseError(ValueError):
    """A table file is malformed; the message carries line diagnostics."""


class TableInvariantError(ValueError):
    """Table contents contradict a structural fact about the counts."""


@dataclass(frozen=True)
class CurveCountTable:
    """Immutable table of N_d for d = 1..d_max (values[i] holds N_{i+1})."""

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.values:
            raise TableInvariantError("table must contain at least N_1")
        if self.values[0] != 1:
            raise TableInvariantError(f"N_1 must be 1, got {self.values[0]}")
        if len(self.values) >= 2 and self.values[1] != 1:
            raise TableInvariantError(f"N_2 must be 1, got {self.values[1]}")
        for d, value in enumerate(self.values, start=1):
            if not isinstance(value, int) or value <= 0:
                raise TableInvariantError(f"N_{d} must be a positive integer, got {value!r}")

    @property
    def d_max(self) -> int:
        return len(self.values)

    def __getitem__(self, d: int) -> int:
        if not 1 <= d <= len(self.values):
            raise IndexError(f"degree {d} outside table range 1..{len(self.values)}")
        return self.values[d - 1]

    def __iter__(self):
        return iter(enumerate(self.values, start=1))


def _recursion_value(d: int, values: list[int]) -> int:
    """One step of the recursion given values[0..d-2] = N_1..N_{d-1}."""
    total = 0
    for d1 in range(1, d):
        d2 = d - d1
        total += values[d1 - 1] * values[d2 - 1] * (
            d1 * d1 * d2 * d2 * binomial(3 * d - 4, 3 * d1 - 2)
            - d1 ** 3 * d2 * binomial(3 * d - 4, 3 * d1 - 1)
        )
    return total


def rational_counts(d_max: int) -> CurveCountTable:
    """Build the table of N_d for 1 <= d <= d_max."""
    if d_max < 1:
        raise ValueError(f"d_max must be >= 1, got {d_max}")
    values = [1]
    for d in range(2, d_max + 1):
        values.append(_recursion_value(d, values))
    return CurveCountTable(tuple(values))


def save_table(table: CurveCountTable, path: str | os.PathLike) -> None:
    """Write the table in the versioned decimal text format."""
    lines = [FORMAT_HEADER]
    lines.extend(f"{d}\t{value}" for d, value in table)
    with open(path, "w", encoding="ascii", newline="\n") as handle:
        handle.write("\n".join(lines) + "\n")


def load_table(path: str | os.PathLike) -> CurveCountTable:
    """Read a table written by save_table; round-trips bit-exactly."""
    with open(path, "r", encoding="ascii", newline="") as handle:
        text = handle.read()
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise TableParseError("line 1: empty file, expected header")
    if lines[0] != FORMAT_HEADER:
        raise TableParseError(f"line 1: expected header {FORMAT_HEADER!r}, got {lines[0]!r}")
    values: list[int] = []
    for lineno, line in enumerate(lines[1:], start=2):
        fields = line.split("\t")
        if len(fields) != 2:
            raise TableParseError(
                f"line {lineno}: expected 'd<TAB>N_d', got {len(fields)} field(s)"
            )
        raw_d, raw_n = fields
        if not raw_d.isdigit():
            raise TableParseError(f"line {lineno}: degree field {raw_d!r} is not a decimal integer")
        if not raw_n.isdigit():
            raise TableParseError(f"line {lineno}: count field {raw_n!r} is not a decimal integer")
        d = int(raw_d)
        if d != len(values) + 1:
            raise TableParseError(
                f"line {lineno}: degree {d} breaks contiguity, expected {len(values) + 1}"
            )
        values.append(int(raw_n))
    return CurveCountTable(tuple(values))
