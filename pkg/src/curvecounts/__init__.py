"""Exact-arithmetic counts of plane curves.

Rational counts N_d through 3d-1 general points, triple-point rational
counts through 3d-2 points, fixed-complex-structure genus-2 counts N_{2,d},
and the leading higher-genus degeneration term, all over arbitrary-precision
rationals, plus a verification suite for the algebraic identities relating
them.
"""

from .exactnum import (
    ExactInteger,
    ExactRational,
    IntegralityError,
    as_integer,
    binomial,
    factorial,
    is_integer,
    rational,
)
from .kontsevich import (
    CurveCountTable,
    TableInvariantError,
    TableParseError,
    load_table,
    rational_counts,
    save_table,
)
from .picard import (
    DegenerationCoefficients,
    DivisorClass,
    InconsistentSystemError,
    boundary_coefficient,
    boundary_intersection,
    hyperplane_coefficient,
    intersect_top,
    triple_point_class,
    triple_point_coefficient_solve,
    triple_point_curve_count,
)
from .genus import (
    Genus2Breakdown,
    compositions,
    genus2_breakdown,
    genus2_count,
    leading_genus_term,
)
from .verify import IdentityResult, run_verification

__version__ = "0.1.0"

__all__ = [
    "CurveCountTable",
    "DegenerationCoefficients",
    "DivisorClass",
    "ExactInteger",
    "ExactRational",
    "Genus2Breakdown",
    "IdentityResult",
    "InconsistentSystemError",
    "IntegralityError",
    "TableInvariantError",
    "TableParseError",
    "as_integer",
    "binomial",
    "boundary_coefficient",
    "boundary_intersection",
    "compositions",
    "factorial",
    "genus2_breakdown",
    "genus2_count",
    "hyperplane_coefficient",
    "intersect_top",
    "is_integer",
    "leading_genus_term",
    "load_table",
    "rational",
    "rational_counts",
    "run_verification",
    "save_table",
    "triple_point_class",
    "triple_point_coefficient_solve",
    "triple_point_curve_count",
]
