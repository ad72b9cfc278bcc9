"""Genus-2 counts with fixed complex structure, their degeneration
breakdown, and the leading all-components-moving term for higher genus.

N_{2,d} counts irreducible, reduced, nodal, degree-d genus-2 plane curves
whose normalization has a fixed generic complex structure and which pass
through 3d - 2 general points (d >= 4):

    N_{2,d} = (d-1)(d-2)(d-3)/(2d) N_d
      + sum_{d1+d2=d} [d1 d2 (d1 d2 d - 6d + 18) - 4d]/(12d)
                      C(3d-2, 3d1-1) d1 d2 N_{d1} N_{d2}

(ordered pairs).  The same number arises by degenerating the genus-2 curve
to two rational components meeting at three points and intersecting the
point conditions with the corresponding fiber of the stable-map space: the
fiber splits into a part where both components map with positive degree
(weights C(d1 d2, 3)) and a part where one component contracts, contributing
twice the triple-point count.  Both routes are exposed so their agreement
can be machine-checked.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterator

from .exactnum import as_integer, binomial, factorial
from .kontsevich import CurveCountTable
from .picard import triple_point_curve_count

__all__ = [
    "AUT_DEGENERATE_GENUS2",
    "AUT_GENERIC_GENUS2",
    "Genus2Breakdown",
    "compositions",
    "genus2_breakdown",
    "genus2_count",
    "leading_genus_term",
]

# Orders of the automorphism groups entering the genus-2 degeneration: 2 for
# the two-component degenerate curve (swap the components), 2 for a generic
# smooth genus-2 curve (the hyperelliptic involution).
AUT_DEGENERATE_GENUS2 = 2
AUT_GENERIC_GENUS2 = 2


@dataclass(frozen=True)
class Genus2Breakdown:
    """Degeneration route to N_{2,d}, split by which components move.

    case_i:  both rational components map with positive degree.
    case_ii: exactly one does (its image acquires a triple point).
    moduli_intersection: their sum, the intersection number on the fiber
    over the degenerate curve.  total rescales by the automorphism ratio and
    must be a positive integer; it must also reproduce the direct formula
    for N_{2,d}, which the verification suite checks for ranges of d.
    """

    degree: int
    case_i: Fraction
    case_ii: Fraction
    moduli_intersection: Fraction
    total: int
    aut_c0: int = AUT_DEGENERATE_GENUS2
    aut_generic: int = AUT_GENERIC_GENUS2

    def __post_init__(self) -> None:
        if self.degree < 4:
            raise ValueError(f"breakdown is defined for d >= 4, got {self.degree}")
        if self.moduli_intersection != self.case_i + self.case_ii:
            raise ValueError("moduli_intersection must equal case_i + case_ii")
        expected = Fraction(self.aut_c0, self.aut_generic) * self.moduli_intersection
        if self.total != expected or self.total <= 0:
            raise ValueError(
                f"total {self.total} must be the positive integer {expected}"
            )


def genus2_count(d: int, counts: CurveCountTable) -> int:
    """N_{2,d} by direct evaluation of the closed formula (d >= 4)."""
    if d < 4:
        raise ValueError(f"genus-2 counts are defined for d >= 4, got {d}")
    if d > counts.d_max:
        raise ValueError(f"table holds d <= {counts.d_max}, need {d}")
    total = Fraction((d - 1) * (d - 2) * (d - 3), 2 * d) * counts[d]
    for d1 in range(1, d):
        d2 = d - d1
        p = d1 * d2
        total += (
            Fraction(p * (p * d - 6 * d + 18) - 4 * d, 12 * d)
            * binomial(3 * d - 2, 3 * d1 - 1)
            * p * counts[d1] * counts[d2]
        )
    return as_integer(total)


def genus2_breakdown(d: int, counts: CurveCountTable) -> Genus2Breakdown:
    """N_{2,d} by the degeneration route, with the case split exposed.

    The 1/2 in front of each case is the automorphism order of the
    degenerate curve; the factor 2 in case (ii) is the choice of which
    component keeps positive degree.
    """
    if d < 4:
        raise ValueError(f"genus-2 breakdown is defined for d >= 4, got {d}")
    if d > counts.d_max:
        raise ValueError(f"table holds d <= {counts.d_max}, need {d}")
    pair_sum = sum(
        binomial(d1 * (d - d1), 3) * binomial(3 * d - 2, 3 * d1 - 1)
        * counts[d1] * counts[d - d1]
        for d1 in range(1, d)
    )
    case_i = Fraction(pair_sum, 2)
    case_ii = Fraction(2 * triple_point_curve_count(d, counts), 2)
    moduli = case_i + case_ii
    total = as_integer(Fraction(AUT_DEGENERATE_GENUS2, AUT_GENERIC_GENUS2) * moduli)
    return Genus2Breakdown(
        degree=d,
        case_i=case_i,
        case_ii=case_ii,
        moduli_intersection=moduli,
        total=total,
    )


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Ordered tuples of `parts` positive integers summing to `total`."""
    if parts < 1 or total < parts:
        return
    for cuts in combinations(range(1, total), parts - 1):
        bounds = (0,) + cuts + (total,)
        yield tuple(hi - lo for lo, hi in zip(bounds, bounds[1:]))


def leading_genus_term(g: int, d: int, counts: CurveCountTable) -> int:
    """Contribution to the fixed-structure genus-g count from maps where all
    2(g-1) components of the degenerate domain move:

        (3d - 2(g-1))! sum_{d_1+...+d_{2(g-1)}=d} prod d_i^3 N_{d_i} / (3 d_i - 1)!

    (ordered compositions, d_i >= 1).  For g > 2 this is one term of the
    count, not the whole of it; it is exposed because it is exactly
    computable from the rational table.
    """
    if g < 2:
        raise ValueError(f"leading term is defined for g >= 2, got {g}")
    parts = 2 * (g - 1)
    if d < parts:
        raise ValueError(f"need d >= {parts} so every component has positive degree")
    if 3 * d - parts < 0:
        raise ValueError(f"point count 3d - 2(g-1) is negative for g={g}, d={d}")
    if d > counts.d_max:
        raise ValueError(f"table holds d <= {counts.d_max}, need {d}")
    total = Fraction(0)
    for comp in compositions(d, parts):
        term = Fraction(1)
        for di in comp:
            term *= Fraction(di ** 3 * counts[di], factorial(3 * di - 1))
        total += term
    return as_integer(factorial(3 * d - parts) * total)
