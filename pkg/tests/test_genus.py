from fractions import Fraction

import pytest

from curvecounts import (
    Genus2Breakdown,
    binomial,
    compositions,
    genus2_breakdown,
    genus2_count,
    leading_genus_term,
    rational_counts,
)

# Frozen output of scripts/oracle_counts.py.
KNOWN_GENUS2_COUNTS = {
    4: 1104,
    5: 558720,
    6: 383436960,
    7: 392308270080,
    8: 590441748986880,
    9: 1268020663600458240,
    10: 3767127679851114700800,
}

KNOWN_CASE_I = {4: 1044, 5: 502320, 6: 334259520}

KNOWN_LEADING_TERMS = {
    (2, 2): 6,
    (2, 3): 336,
    (2, 4): 45288,
    (2, 5): 12861888,
    (3, 4): 2520,
    (3, 5): 1330560,
    (3, 6): 931458528,
    (4, 6): 7484400,
    (4, 7): 16345929600,
}


def test_genus2_known_values(counts):
    for d, expected in KNOWN_GENUS2_COUNTS.items():
        assert genus2_count(d, counts) == expected


def test_genus2_preconditions(counts):
    with pytest.raises(ValueError):
        genus2_count(3, counts)
    with pytest.raises(ValueError):
        genus2_count(counts.d_max + 1, counts)


def test_breakdown_degree_four(counts):
    b = genus2_breakdown(4, counts)
    assert b.case_i == 1044
    assert b.case_ii == 60
    assert b.moduli_intersection == 1104
    assert b.aut_c0 == 2 and b.aut_generic == 2
    assert b.total == 1104


def test_breakdown_case_i_values(counts):
    for d, expected in KNOWN_CASE_I.items():
        assert genus2_breakdown(d, counts).case_i == expected


def test_breakdown_preconditions(counts):
    with pytest.raises(ValueError):
        genus2_breakdown(3, counts)
    with pytest.raises(ValueError):
        genus2_breakdown(counts.d_max + 1, counts)


def test_breakdown_type_checks_its_invariants():
    with pytest.raises(ValueError):
        Genus2Breakdown(
            degree=4, case_i=Fraction(1044), case_ii=Fraction(60),
            moduli_intersection=Fraction(1105), total=1105,
        )
    with pytest.raises(ValueError):
        Genus2Breakdown(
            degree=4, case_i=Fraction(1044), case_ii=Fraction(60),
            moduli_intersection=Fraction(1104), total=1105,
        )


def test_decomposition_identity(counts):
    for d in range(4, 26):
        assert genus2_breakdown(d, counts).total == genus2_count(d, counts)


def test_decomposition_polynomial_identity():
    # The term-by-term reason the two routes agree, in p = d1*d2.
    for d in range(4, 26):
        for p in range(1, d * d // 4 + 1):
            assert (
                d * p * p - 6 * p * d + 18 * p - 4 * d
                == d * (p - 1) * (p - 2) - 3 * p * (d - 6) - 6 * d
            )


def test_genus2_positive(counts):
    for d in range(4, 26):
        assert genus2_count(d, counts) > 0


def test_compositions_enumeration():
    assert list(compositions(3, 2)) == [(1, 2), (2, 1)]
    assert list(compositions(4, 4)) == [(1, 1, 1, 1)]
    assert list(compositions(2, 3)) == []
    assert sum(1 for _ in compositions(10, 4)) == binomial(9, 3)


def test_leading_term_known_values(counts):
    for (g, d), expected in KNOWN_LEADING_TERMS.items():
        assert leading_genus_term(g, d, counts) == expected


def test_leading_term_preconditions(counts):
    with pytest.raises(ValueError):
        leading_genus_term(1, 5, counts)
    with pytest.raises(ValueError):
        leading_genus_term(3, 3, counts)
    short = rational_counts(2)
    with pytest.raises(ValueError):
        leading_genus_term(2, 3, short)


def test_leading_term_binomial_collapse(counts):
    """With two parts, the factorial weight collapses to one binomial."""
    for d in range(2, 16):
        collapsed = sum(
            binomial(3 * d - 2, 3 * d1 - 1) * d1 ** 3 * (d - d1) ** 3
            * counts[d1] * counts[d - d1]
            for d1 in range(1, d)
        )
        assert leading_genus_term(2, d, counts) == collapsed


def test_case_i_weight_differs_from_leading_term_weight(counts):
    """C(d1 d2, 3) is not d1^3 d2^3 / 6: the two degeneration sums must differ."""
    d = 4
    cubes_half_sum = sum(
        Fraction(d1 ** 3 * (d - d1) ** 3, 6) * binomial(3 * d - 2, 3 * d1 - 1)
        * counts[d1] * counts[d - d1]
        for d1 in range(1, d)
    ) / 2
    assert genus2_breakdown(d, counts).case_i != cubes_half_sum
    assert cubes_half_sum == Fraction(leading_genus_term(2, d, counts), 12)
