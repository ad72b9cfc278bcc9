#!/usr/bin/env python3
"""Independent oracle for the plane-curve count formulas.

Standalone on purpose: this script must not import the curvecounts package.
It evaluates every formula directly with math.comb and fractions.Fraction,
so the package's Pascal-cache binomials and table machinery are checked
against a second, dumber implementation.

Subcommands (all print one space-separated record per line):

    nd D          N_d for 1 <= d <= D
    triple D      triple-point counts for 3 <= d <= D
    genus2 D      genus-2 counts for 4 <= d <= D
    casei D       case-(i) half-sums for 4 <= d <= D
    gterm G D     leading higher-genus term for the single pair (G, D)
"""

import argparse
import sys
from fractions import Fraction
from itertools import combinations
from math import comb, factorial


def rational_counts(d_max):
    """Degree -> count of rational plane curves through 3d-1 general points."""
    n = {1: 1}
    for d in range(2, d_max + 1):
        total = 0
        for d1 in range(1, d):
            d2 = d - d1
            total += n[d1] * n[d2] * (
                d1 ** 2 * d2 ** 2 * comb(3 * d - 4, 3 * d1 - 2)
                - d1 ** 3 * d2 * comb(3 * d - 4, 3 * d1 - 1)
            )
        n[d] = total
    return n


def triple_point_count(d, n):
    total = Fraction((d - 1) * (d - 2) * (d - 3), 2 * d) * n[d]
    for d1 in range(1, d):
        d2 = d - d1
        total -= (
            Fraction(d1 * d2 * (d - 6) + 2 * d, 4 * d)
            * comb(3 * d - 2, 3 * d1 - 1)
            * d1 * d2 * n[d1] * n[d2]
        )
    assert total.denominator == 1 and total >= 0, (d, total)
    return total.numerator


def genus2_count(d, n):
    total = Fraction((d - 1) * (d - 2) * (d - 3), 2 * d) * n[d]
    for d1 in range(1, d):
        d2 = d - d1
        p = d1 * d2
        total += (
            Fraction(p * (p * d - 6 * d + 18) - 4 * d, 12 * d)
            * comb(3 * d - 2, 3 * d1 - 1)
            * p * n[d1] * n[d2]
        )
    assert total.denominator == 1, (d, total)
    return total.numerator


def case_i_half_sum(d, n):
    total = sum(
        comb(d1 * (d - d1), 3) * comb(3 * d - 2, 3 * d1 - 1) * n[d1] * n[d - d1]
        for d1 in range(1, d)
    )
    return Fraction(total, 2)


def leading_genus_term(g, d, n):
    parts = 2 * (g - 1)
    total = Fraction(0)
    for cuts in combinations(range(1, d), parts - 1):
        bounds = (0,) + cuts + (d,)
        term = Fraction(1)
        for lo, hi in zip(bounds, bounds[1:]):
            di = hi - lo
            term *= Fraction(di ** 3 * n[di], factorial(3 * di - 1))
        total += term
    value = factorial(3 * d - parts) * total
    assert value.denominator == 1, (g, d, value)
    return value.numerator


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("nd", "triple", "genus2", "casei"):
        p = sub.add_parser(name)
        p.add_argument("d_max", type=int)
    p = sub.add_parser("gterm")
    p.add_argument("g", type=int)
    p.add_argument("d", type=int)

    args = parser.parse_args(argv)
    if args.command == "gterm":
        n = rational_counts(args.d)
        print(args.g, args.d, leading_genus_term(args.g, args.d, n))
        return 0

    n = rational_counts(args.d_max)
    if args.command == "nd":
        for d in range(1, args.d_max + 1):
            print(d, n[d])
    elif args.command == "triple":
        for d in range(3, args.d_max + 1):
            print(d, triple_point_count(d, n))
    elif args.command == "genus2":
        for d in range(4, args.d_max + 1):
            print(d, genus2_count(d, n))
    elif args.command == "casei":
        for d in range(4, args.d_max + 1):
            print(d, case_i_half_sum(d, n))
    return 0


if __name__ == "__main__":
    sys.exit(main())
