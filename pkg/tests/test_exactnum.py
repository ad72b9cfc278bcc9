import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from curvecounts import exactnum
from curvecounts.exactnum import (
    IntegralityError,
    as_integer,
    binomial,
    factorial,
    is_integer,
    rational,
)


def test_binomial_known_values():
    assert binomial(10, 2) == 45
    assert binomial(0, 0) == 1
    assert binomial(600, 300) == math.comb(600, 300)


def test_binomial_out_of_range_k_is_zero():
    assert binomial(5, 7) == 0
    assert binomial(5, -1) == 0
    assert binomial(0, 1) == 0


def test_binomial_negative_n_rejected():
    with pytest.raises(ValueError):
        binomial(-1, 0)


def test_binomial_above_cutoff_uses_multiplicative_path():
    old = exactnum.PASCAL_CUTOFF
    try:
        exactnum.set_pascal_cutoff(10)
        assert binomial(50, 20) == math.comb(50, 20)
        assert binomial(10, 4) == 210
    finally:
        exactnum.set_pascal_cutoff(old)


def test_set_pascal_cutoff_rejects_negative():
    with pytest.raises(ValueError):
        exactnum.set_pascal_cutoff(-1)


def test_pascal_identity_exhaustive():
    for n in range(1, 301):
        row = [binomial(n, k) for k in range(n + 1)]
        prev = [binomial(n - 1, k) for k in range(-1, n + 1)]
        for k in range(n + 1):
            assert row[k] == prev[k] + prev[k + 1]


def test_row_sums_are_powers_of_two():
    for n in range(41):
        assert sum(binomial(n, k) for k in range(n + 1)) == 2 ** n


@given(st.integers(0, 300), st.integers(-5, 305))
def test_binomial_matches_math_comb(n, k):
    expected = math.comb(n, k) if 0 <= k <= n else 0
    assert binomial(n, k) == expected


def test_factorial_values():
    assert factorial(0) == 1
    assert factorial(5) == 120
    assert factorial(8) == 40320


def test_rational_normalization():
    assert rational(6, 8) == Fraction(3, 4)
    assert rational(-2, -4) == Fraction(1, 2)
    assert rational(0, 7) == Fraction(0)
    assert rational(0, 7).denominator == 1


def test_rational_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        rational(1, 0)


nonzero_fractions = st.fractions().filter(lambda f: f != 0)


@given(st.fractions(), st.fractions(), st.fractions())
def test_field_laws(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + y == y + x and x * y == y * x


@given(nonzero_fractions)
def test_multiplicative_inverse(x):
    assert x * (1 / x) == 1


@given(st.fractions())
def test_is_integer_agrees_with_numerator(r):
    if is_integer(r):
        assert r == r.numerator
        assert as_integer(r) == r.numerator
    else:
        with pytest.raises(IntegralityError):
            as_integer(r)


def test_as_integer_rejects_proper_fraction():
    with pytest.raises(IntegralityError):
        as_integer(Fraction(3, 4))
