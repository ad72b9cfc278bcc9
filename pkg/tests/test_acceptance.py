"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line
(run with `pytest tests/test_acceptance.py -v -s` to see them)."""

import subprocess
import sys
import time
from contextlib import contextmanager

from curvecounts import (
    boundary_coefficient,
    genus2_breakdown,
    genus2_count,
    hyperplane_coefficient,
    intersect_top,
    leading_genus_term,
    load_table,
    rational_counts,
    save_table,
    triple_point_class,
    triple_point_coefficient_solve,
    triple_point_curve_count,
)
from curvecounts.cli import main as cli_main
from curvecounts.exactnum import binomial

from conftest import ORACLE_SCRIPT


@contextmanager
def criterion(name):
    try:
        yield
    except BaseException:
        print(f"ACCEPTANCE FAIL: {name}")
        raise
    print(f"ACCEPTANCE PASS: {name}")


def test_rational_count_regression_and_speed():
    with criterion("rational counts match the oracle and d<=100 runs in <10s"):
        start = time.perf_counter()
        table = rational_counts(100)
        elapsed = time.perf_counter() - start
        assert elapsed < 10.0, f"d<=100 took {elapsed:.2f}s"
        assert table[1] == 1 and table[2] == 1
        assert table[3] == 12 and table[4] == 620 and table[5] == 87304
        proc = subprocess.run(
            [sys.executable, str(ORACLE_SCRIPT), "nd", "10"],
            capture_output=True, text=True, check=True,
        )
        for line in proc.stdout.splitlines():
            d, value = line.split()
            assert table[int(d)] == int(value)


def test_coefficient_solve_exactness():
    with criterion("coefficient solve equals the closed form for 3<=d<=40"):
        for d in range(3, 41):
            solved = triple_point_coefficient_solve(d)  # raises if x/y routes differ
            assert solved.a == hyperplane_coefficient(d)
            for i, a_i in enumerate(solved.a_i, start=1):
                assert a_i == boundary_coefficient(d, i)


def test_triple_point_counts():
    with criterion("triple-point counts: pinned values and route agreement to d=25"):
        counts = rational_counts(25)
        assert triple_point_curve_count(3, counts) == 0
        assert triple_point_curve_count(4, counts) == 60
        assert triple_point_curve_count(5, counts) == 56400
        for d in range(3, 26):
            direct = triple_point_curve_count(d, counts)
            assert direct >= 0
            assert intersect_top(triple_point_class(d), counts) == direct


def test_genus2_identity():
    with criterion("genus-2 breakdown equals the direct count for 4<=d<=25 in <5s"):
        start = time.perf_counter()
        counts = rational_counts(25)
        assert genus2_count(4, counts) == 1104
        assert genus2_count(5, counts) == 558720
        for d in range(4, 26):
            assert genus2_breakdown(d, counts).total == genus2_count(d, counts)
        elapsed = time.perf_counter() - start
        assert elapsed < 5.0, f"genus-2 identity block took {elapsed:.2f}s"


def test_higher_genus_term():
    with criterion("higher-genus term: pinned values and binomial collapse to d=15"):
        counts = rational_counts(15)
        assert leading_genus_term(2, 2, counts) == 6
        assert leading_genus_term(3, 4, counts) == 2520
        for d in range(2, 16):
            collapsed = sum(
                binomial(3 * d - 2, 3 * d1 - 1) * d1 ** 3 * (d - d1) ** 3
                * counts[d1] * counts[d - d1]
                for d1 in range(1, d)
            )
            assert leading_genus_term(2, d, counts) == collapsed


def test_serialization_and_verify_command(tmp_path):
    with criterion("table round-trip is bit-exact at d_max=50 and `verify 15` exits 0"):
        table = rational_counts(50)
        first = tmp_path / "first.txt"
        second = tmp_path / "second.txt"
        save_table(table, first)
        reloaded = load_table(first)
        assert reloaded == table
        save_table(reloaded, second)
        assert first.read_bytes() == second.read_bytes()
        assert cli_main(["verify", "15", "--no-header"]) == 0
