"""Divisor arithmetic on the space of degree-d rational stable maps to the
plane, and the count of rational curves with one triple point.

The rational Picard group of the degree-d genus-0 stable-map space is
generated by the point-incidence divisor H (maps whose image passes through
a fixed general point) and the boundary divisors K^i, 1 <= i <= floor(d/2),
whose general member has a two-component domain splitting the degree as
(i, d-i).  Top intersections against powers of H reduce to the rational
counts N_d:

    H^(3d-1)          = N_d
    K^i . H^(3d-2)    = C(3d-2, 3i-1) i (d-i) N_i N_{d-i}      (i != d/2)
                      = (1/2) C(3d-2, 3i-1) (d/2)^2 N_{d/2}^2  (i == d/2)

The closure of the locus of maps whose image has exactly one triple point
(all other singularities nodes) is itself a divisor; expanding it in this
basis and pairing with H^(3d-2) yields the triple-point count.  The
expansion coefficients are pinned by sweeping a pencil of degree-(d, k)
curves on P^1 x C, comparing the boundary/incidence intersection numbers of
the induced family with Kleiman's triple-point formula, and matching the
coefficients of the formal variables k, x_i, y_i on both sides (x_i and y_i
count base points of the pencil blowing up to degree i resp. d-i).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .exactnum import IntegralityError, as_integer, binomial
from .kontsevich import CurveCountTable

__all__ = [
    "DegenerationCoefficients",
    "DivisorClass",
    "InconsistentSystemError",
    "boundary_intersection",
    "hyperplane_coefficient",
    "boundary_coefficient",
    "intersect_top",
    "triple_point_class",
    "triple_point_coefficient_solve",
    "triple_point_curve_count",
]


class InconsistentSystemError(ArithmeticError):
    """The overdetermined coefficient system disagreed with itself.

    Each boundary coefficient is determined twice (once per orientation of
    the degree split); a mismatch can only mean a formula transcription bug.
    """


def hyperplane_coefficient(d: int) -> Fraction:
    """Closed form for the H-coefficient of the triple-point divisor class."""
    return Fraction((d - 1) * (d - 2) * (d - 3), 2 * d)


def boundary_coefficient(d: int, i: int) -> Fraction:
    """Closed form for the K^i-coefficient of the triple-point divisor class."""
    return Fraction(-(i * (d - i) * (d - 6) + 2 * d), 2 * d)


@dataclass(frozen=True)
class DivisorClass:
    """Q-linear combination coef_H * H + sum_i coef_K[i] * K^i in degree d."""

    degree: int
    coef_H: Fraction = Fraction(0)
    coef_K: Mapping[int, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.degree < 2:
            raise ValueError(f"divisor classes need degree >= 2, got {self.degree}")
        top = self.degree // 2
        for i in self.coef_K:
            if not 1 <= i <= top:
                raise ValueError(
                    f"boundary index {i} outside 1..{top} for degree {self.degree}"
                )
        object.__setattr__(self, "coef_K", dict(self.coef_K))


@dataclass(frozen=True)
class DegenerationCoefficients:
    """Solved expansion of the triple-point divisor: a * H + sum_i a_i * K^i.

    Stored values must agree with the closed forms
    a = (d-1)(d-2)(d-3) / (2d)  and  a_i = -(i(d-i)(d-6) + 2d) / (2d);
    construction re-checks this so a bad solve cannot circulate.
    """

    degree: int
    a: Fraction
    a_i: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        d = self.degree
        if d < 3:
            raise ValueError(f"coefficients are defined for degree >= 3, got {d}")
        if len(self.a_i) != d // 2:
            raise ValueError(f"expected {d // 2} boundary coefficients, got {len(self.a_i)}")
        if self.a != hyperplane_coefficient(d):
            raise ValueError(f"a = {self.a} contradicts the closed form for d={d}")
        for i, a_i in enumerate(self.a_i, start=1):
            if a_i != boundary_coefficient(d, i):
                raise ValueError(f"a_{i} = {a_i} contradicts the closed form for d={d}")

    def divisor_class(self) -> DivisorClass:
        return DivisorClass(
            degree=self.degree,
            coef_H=self.a,
            coef_K={i: a_i for i, a_i in enumerate(self.a_i, start=1)},
        )


def boundary_intersection(d: int, i: int, counts: CurveCountTable) -> Fraction:
    """Intersection number K^i . H^(3d-2); halved at the symmetric split i = d/2."""
    if not 2 <= d <= counts.d_max:
        raise ValueError(f"degree {d} outside 2..{counts.d_max} (table too short?)")
    if not 1 <= i <= d // 2:
        raise ValueError(f"boundary index {i} outside 1..{d // 2} for degree {d}")
    value = Fraction(binomial(3 * d - 2, 3 * i - 1) * i * (d - i) * counts[i] * counts[d - i])
    if 2 * i == d:
        value /= 2
    return value


def intersect_top(cls: DivisorClass, counts: CurveCountTable) -> Fraction:
    """Pair a divisor class with H^(3d-2) by linearity in the generators."""
    d = cls.degree
    if d > counts.d_max:
        raise ValueError(f"table holds d <= {counts.d_max}, class has degree {d}")
    total = cls.coef_H * counts[d]
    for i, coef in cls.coef_K.items():
        if coef:
            total += coef * boundary_intersection(d, i, counts)
    return total


def _triple_point_formula_x(d: int, i: int) -> Fraction:
    """x_i-coefficient of the triple-point-formula side of the matching."""
    return Fraction(-i * i * d * d, 2) + 3 * i * i * d - Fraction(i * d, 2) - 1 + 3 * i - 5 * i * i


def _triple_point_formula_y(d: int, i: int) -> Fraction:
    """y_i-coefficient: the x-side polynomial evaluated at the split d-i."""
    return _triple_point_formula_x(d, d - i)


def triple_point_coefficient_solve(d: int) -> DegenerationCoefficients:
    """Recover the triple-point divisor class by coefficient matching.

    Both sides of the pencil computation are linear forms in the formal
    variables k, x_1..x_{floor(d/2)}, y_1..y_{floor(d/2)}.  The k-coefficients
    give 2ad = (d-1)(d-2)(d-3); each a_i is then determined twice, via

        a_i - a i^2       = (x_i-coefficient of the triple-point formula)
        a_i - a (d-i)^2   = (y_i-coefficient of the triple-point formula)

    and the two determinations are required to agree.
    """
    if d < 3:
        raise ValueError(f"coefficient solve needs degree >= 3, got {d}")
    a = Fraction((d - 1) * (d - 2) * (d - 3), 2 * d)
    a_i = []
    for i in range(1, d // 2 + 1):
        from_x = a * i * i + _triple_point_formula_x(d, i)
        from_y = a * (d - i) * (d - i) + _triple_point_formula_y(d, i)
        if from_x != from_y:
            raise InconsistentSystemError(
                f"d={d}, i={i}: x-route gives a_i={from_x}, y-route gives a_i={from_y}"
            )
        a_i.append(from_x)
    return DegenerationCoefficients(degree=d, a=a, a_i=tuple(a_i))


def triple_point_class(d: int) -> DivisorClass:
    """The triple-point divisor expanded in the H, K^i basis."""
    return triple_point_coefficient_solve(d).divisor_class()


def triple_point_curve_count(d: int, counts: CurveCountTable) -> int:
    """Number of degree-d rational plane curves through 3d-2 general points
    with exactly one triple point, all other singularities nodes.

        (d-1)(d-2)(d-3)/(2d) N_d
          - sum_{d1+d2=d} [d1 d2 (d-6) + 2d]/(4d) C(3d-2, 3d1-1) d1 d2 N_{d1} N_{d2}

    (ordered pairs, d1, d2 >= 1).  Equals the pairing of the triple-point
    divisor class with H^(3d-2); the two routes are compared in the
    verification suite rather than here.
    """
    if d < 3:
        raise ValueError(f"triple-point counts are defined for d >= 3, got {d}")
    if d > counts.d_max:
        raise ValueError(f"table holds d <= {counts.d_max}, need {d}")
    total = Fraction((d - 1) * (d - 2) * (d - 3), 2 * d) * counts[d]
    for d1 in range(1, d):
        d2 = d - d1
        total -= (
            Fraction(d1 * d2 * (d - 6) + 2 * d, 4 * d)
            * binomial(3 * d - 2, 3 * d1 - 1)
            * d1 * d2 * counts[d1] * counts[d2]
        )
    value = as_integer(total)
    if value < 0:
        raise IntegralityError(f"triple-point count for d={d} is negative: {value}")
    return value
