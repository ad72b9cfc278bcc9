"""Exact integer and rational arithmetic plus the combinatorial helpers
(binomials, factorials) that every count formula consumes.

Python's ``int`` is already an arbitrary-precision integer and
``fractions.Fraction`` is already a normalized exact rational (lowest terms,
positive denominator), so those are the two scalar types; this module adds
the binomial cache and the integer-coercion guard the formulas rely on.

Binomials for row index ``n <= PASCAL_CUTOFF`` are served from a lazily
grown Pascal triangle because the recursions request the same rows over and
over; larger ones fall through to ``math.comb``.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction

__all__ = [
    "ExactInteger",
    "ExactRational",
    "IntegralityError",
    "PASCAL_CUTOFF",
    "as_integer",
    "binomial",
    "factorial",
    "is_integer",
    "rational",
    "set_pascal_cutoff",
]

ExactInteger = int
ExactRational = Fraction

PASCAL_CUTOFF: int = 1000


class IntegralityError(ValueError):
    """A quantity that must be a (nonnegative) integer failed to be one.

    Every final curve count is an integer; a fractional or negative value
    can only come from a formula transcription bug, so this is never a
    recoverable condition.
    """


def set_pascal_cutoff(n: int) -> None:
    """Set the largest row index served from the Pascal-triangle cache."""
    global PASCAL_CUTOFF
    if n < 0:
        raise ValueError("cutoff must be nonnegative")
    PASCAL_CUTOFF = n


class _PascalCache:
    """Lazily built Pascal triangle; rows are immutable once appended."""

    def __init__(self) -> None:
        self._rows: list[list[int]] = [[1]]
        self._lock = threading.Lock()

    def row(self, n: int) -> list[int]:
        rows = self._rows
        if n < len(rows):
            return rows[n]
        with self._lock:
            while len(self._rows) <= n:
                prev = self._rows[-1]
                nxt = [1]
                nxt.extend(prev[j - 1] + prev[j] for j in range(1, len(prev)))
                nxt.append(1)
                self._rows.append(nxt)
            return self._rows[n]


_CACHE = _PascalCache()


def binomial(n: int, k: int) -> int:
    """C(n, k) for n >= 0 and arbitrary integer k; 0 outside 0 <= k <= n.

    Returning 0 for out-of-range k keeps the summation bounds in the count
    formulas free of special cases.
    """
    if n < 0:
        raise ValueError(f"binomial row must be nonnegative, got n={n}")
    if k < 0 or k > n:
        return 0
    if n <= PASCAL_CUTOFF:
        return _CACHE.row(n)[k]
    return math.comb(n, k)


factorial = math.factorial


def rational(num: int, den: int) -> Fraction:
    """Exact fraction num/den, normalized; raises ZeroDivisionError on den=0."""
    return Fraction(num, den)


def is_integer(r: Fraction) -> bool:
    return r.denominator == 1


def as_integer(r: Fraction) -> int:
    """Coerce an exact rational that must be integral, or raise."""
    if r.denominator != 1:
        raise IntegralityError(f"expected an integer, got {r}")
    return r.numerator
