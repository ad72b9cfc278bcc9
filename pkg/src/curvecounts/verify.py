"""Named algebraic identities tying the modules together.

Each identity re-derives one side of a formula independently of the code
path it checks (fresh sums over pairs, closed forms, symmetrized loops), so
a transcription bug in any one place shows up as a named FAIL with the
first offending degree.  `run_verification(d_max)` evaluates the whole
registry up to d_max.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .exactnum import binomial, factorial, is_integer
from .kontsevich import CurveCountTable, rational_counts
from .picard import (
    boundary_coefficient,
    boundary_intersection,
    hyperplane_coefficient,
    intersect_top,
    triple_point_coefficient_solve,
    triple_point_curve_count,
)
from .genus import genus2_breakdown, genus2_count, leading_genus_term

__all__ = ["IdentityResult", "run_verification", "IDENTITY_NAMES"]


@dataclass(frozen=True)
class IdentityResult:
    name: str
    passed: bool
    first_failure: Optional[int] = None

    def describe(self) -> str:
        if self.passed:
            return f"PASS {self.name}"
        if self.first_failure is None:
            return f"FAIL {self.name}"
        return f"FAIL {self.name} (first failing d={self.first_failure})"


def _check_pascal(d_max: int, counts: CurveCountTable) -> Optional[int]:
    for n in range(1, max(3 * d_max - 2, 4) + 1):
        for k in range(0, n + 1):
            if binomial(n, k) != binomial(n - 1, k - 1) + binomial(n - 1, k):
                return n
    return None


def _check_row_sums(d_max: int, counts: CurveCountTable) -> Optional[int]:
    for n in range(0, max(3 * d_max - 2, 4) + 1):
        if sum(binomial(n, k) for k in range(n + 1)) != 2 ** n:
            return n
    return None


def _check_rational_field_laws(d_max: int, counts: CurveCountTable) -> Optional[int]:
    grid = [Fraction(p, q) for p in (-3, -1, 0, 2, 7) for q in (1, 2, 5)]
    for idx, x in enumerate(grid):
        for y in grid:
            for z in grid:
                if (x + y) + z != x + (y + z) or (x * y) * z != x * (y * z):
                    return idx
                if x * (y + z) != x * y + x * z:
                    return idx
    return None


def _check_base_values(d_max: int, counts: CurveCountTable) -> Optional[int]:
    if counts[1] != 1:
        return 1
    if d_max >= 2 and counts[2] != 1:
        return 2
    return None


def _check_symmetrized_sum(d_max: int, counts: CurveCountTable) -> Optional[int]:
    def ordered_term(d, d1):
        d2 = d - d1
        return counts[d1] * counts[d2] * (
            d1 * d1 * d2 * d2 * binomial(3 * d - 4, 3 * d1 - 2)
            - d1 ** 3 * d2 * binomial(3 * d - 4, 3 * d1 - 1)
        )

    for d in range(2, d_max + 1):
        unordered = 0
        for d1 in range(1, d // 2 + 1):
            if 2 * d1 == d:
                unordered += ordered_term(d, d1)
            else:
                unordered += ordered_term(d, d1) + ordered_term(d, d - d1)
        if unordered != counts[d]:
            return d
    return None


def _check_monotone_growth(d_max: int, counts: CurveCountTable) -> Optional[int]:
    for d in range(3, d_max):
        if counts[d + 1] <= counts[d]:
            return d
    return None


def _check_closed_form(d_max: int, counts: CurveCountTable) -> Optional[int]:
    for d in range(3, d_max + 1):
        solved = triple_point_coefficient_solve(d)
        if solved.a != hyperplane_coefficient(d):
            return d
        for i, a_i in enumerate(solved.a_i, start=1):
            if a_i != boundary_coefficient(d, i):
                return d
    return None


def _check_overdetermined(d_max: int, counts: CurveCountTable) -> Optional[int]:
    for d in range(3, d_max + 1):
        try:
            triple_point_coefficient_solve(d)
        except ArithmeticError:
            return d
    return None


def _check_two_routes(d_max: int, counts: CurveCountTable) -> Optional[int]:
    for d in range(3, d_max + 1):
        try:
            direct = triple_point_curve_count(d, counts)
        except ValueError:
            return d
        via_class = intersect_top(triple_point_coefficient_solve(d).divisor_class(), counts)
        if via_class != direct:
            return d
    return None


def _check_sum_convention(d_max: int, counts: CurveCountTable) -> Optional[int]:
    for d in range(3, d_max + 1):
        ordered = sum(
            Fraction(d1 * (d - d1) * (d - 6) + 2 * d, 4 * d)
            * binomial(3 * d - 2, 3 * d1 - 1)
            * d1 * (d - d1) * counts[d1] * counts[d - d1]
            for d1 in range(1, d)
        )
        indexed = sum(
            -boundary_coefficient(d, i) * boundary_intersection(d, i, counts)
            for i in range(1, d // 2 + 1)
        )
        if ordered != indexed:
            return d
    return None


def _check_triple_integrality(d_max: int, counts: CurveCountTable) -> Optional[int]:
    for d in range(3, d_max + 1):
        try:
            if triple_point_curve_count(d, counts) < 0:
                return d
        except ValueError:
            return d
    return None


def _check_decomposition(d_max: int, counts: CurveCountTable) -> Optional[int]:
    for d in range(4, d_max + 1):
        try:
            if genus2_breakdown(d, counts).total != genus2_count(d, counts):
                return d
        except ValueError:
            return d
    return None


def _check_decomposition_symbolic(d_max: int, counts: CurveCountTable) -> Optional[int]:
    # Polynomial identity behind the decomposition, in p = d1*d2:
    # d p^2 - 6pd + 18p - 4d == d(p-1)(p-2) - 3p(d-6) - 6d.
    for d in range(4, d_max + 1):
        for p in range(1, d * d // 4 + 1):
            lhs = d * p * p - 6 * p * d + 18 * p - 4 * d
            rhs = d * (p - 1) * (p - 2) - 3 * p * (d - 6) - 6 * d
            if lhs != rhs:
                return d
    return None


def _check_genus2_positive(d_max: int, counts: CurveCountTable) -> Optional[int]:
    for d in range(4, d_max + 1):
        try:
            if genus2_count(d, counts) <= 0:
                return d
        except ValueError:
            return d
    return None


def _check_collapse(d_max: int, counts: CurveCountTable) -> Optional[int]:
    # For two parts the factorial prefactor collapses to a single binomial.
    for d in range(2, d_max + 1):
        binomial_form = sum(
            binomial(3 * d - 2, 3 * d1 - 1) * d1 ** 3 * (d - d1) ** 3
            * counts[d1] * counts[d - d1]
            for d1 in range(1, d)
        )
        try:
            if leading_genus_term(2, d, counts) != binomial_form:
                return d
        except ValueError:
            return d
    return None


def _check_case_weights_distinct(d_max: int, counts: CurveCountTable) -> Optional[int]:
    # Guard against conflating the both-components-moving weight C(d1 d2, 3)
    # with the all-moving-components weight d1^3 d2^3 / 6 of the general-genus
    # term; at d = 4 the resulting half-sums must differ.
    if d_max < 4:
        return None
    d = 4
    case_i = genus2_breakdown(d, counts).case_i
    cubes = sum(
        Fraction(d1 ** 3 * (d - d1) ** 3, 6) * binomial(3 * d - 2, 3 * d1 - 1)
        * counts[d1] * counts[d - d1]
        for d1 in range(1, d)
    ) / 2
    if case_i == cubes:
        return d
    return None


def _check_final_counts_integral(d_max: int, counts: CurveCountTable) -> Optional[int]:
    for d in range(4, d_max + 1):
        direct = Fraction((d - 1) * (d - 2) * (d - 3), 2 * d) * counts[d]
        for d1 in range(1, d):
            p = d1 * (d - d1)
            direct += (
                Fraction(p * (p * d - 6 * d + 18) - 4 * d, 12 * d)
                * binomial(3 * d - 2, 3 * d1 - 1)
                * p * counts[d1] * counts[d - d1]
            )
        if not is_integer(direct):
            return d
    return None


_Check = Callable[[int, CurveCountTable], Optional[int]]

_REGISTRY: tuple[tuple[str, _Check], ...] = (
    ("binomial-pascal", _check_pascal),
    ("binomial-row-sum", _check_row_sums),
    ("rational-field-laws", _check_rational_field_laws),
    ("counts-base-values", _check_base_values),
    ("counts-symmetrized-sum", _check_symmetrized_sum),
    ("counts-monotone-growth", _check_monotone_growth),
    ("coefficients-closed-form", _check_closed_form),
    ("coefficients-overdetermined", _check_overdetermined),
    ("triple-point-two-routes", _check_two_routes),
    ("triple-point-sum-convention", _check_sum_convention),
    ("triple-point-nonnegative-integer", _check_triple_integrality),
    ("genus2-decomposition", _check_decomposition),
    ("genus2-decomposition-symbolic", _check_decomposition_symbolic),
    ("genus2-integrality", _check_final_counts_integral),
    ("genus2-positive", _check_genus2_positive),
    ("higher-genus-collapse", _check_collapse),
    ("case-weights-distinct", _check_case_weights_distinct),
)

IDENTITY_NAMES: tuple[str, ...] = tuple(name for name, _ in _REGISTRY)


def run_verification(d_max: int, counts: Optional[CurveCountTable] = None) -> list[IdentityResult]:
    """Evaluate every named identity up to degree d_max."""
    if d_max < 1:
        raise ValueError(f"d_max must be >= 1, got {d_max}")
    if counts is None or counts.d_max < d_max:
        counts = rational_counts(d_max)
    results = []
    for name, check in _REGISTRY:
        try:
            failure = check(d_max, counts)
            passed = failure is None
        except (ValueError, ArithmeticError):
            # A check blowing up (e.g. on a corrupted table) is a failure of
            # that identity, not of the whole report.
            failure = None
            passed = False
        results.append(IdentityResult(name=name, passed=passed, first_failure=failure))
    return results
