"""Published reference data used by the verification suite.

All values are transcribed verbatim from the published tables: the 4D
index-formula coefficient table (orders 4-8), the Lebesgue-constant
comparison table (orders 1-10), and the barycentric node tables for the
optimized pentatope point sets of orders 1-4.

The Lebesgue table's stated grid-spacing column does not describe how every
published value was produced: the warped-set entries (optimized and
alpha=0 columns) for several orders reproduce exactly at a different
spacing, recorded here as ``effective_h``.  The equidistant column is
consistent with the stated spacings throughout.  Values established by
sweep: see tests and the verification suite.
"""

from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "INDEXING_COEFFICIENTS_BY_ORDER",
    "LEBESGUE_TABLE",
    "LebesgueRow",
    "REFERENCE_NODES_4D",
]

F = Fraction

# Coefficients C1..C15 of the 4D modal index formula for p = 4..8.
INDEXING_COEFFICIENTS_BY_ORDER = {
    4: (F(533, 12), F(-251, 24), F(13, 12), F(-1, 24), F(107, 6), F(-6), F(1, 2),
        F(-3), F(1, 2), F(1, 6), F(11, 2), F(-1), F(-1), F(-1, 2), F(1)),
    5: (F(275, 4), F(-335, 24), F(5, 4), F(-1, 24), F(73, 3), F(-7), F(1, 2),
        F(-7, 2), F(1, 2), F(1, 6), F(13, 2), F(-1), F(-1), F(-1, 2), F(1)),
    6: (F(1207, 12), F(-431, 24), F(17, 12), F(-1, 24), F(191, 6), F(-8), F(1, 2),
        F(-4), F(1, 2), F(1, 6), F(15, 2), F(-1), F(-1), F(-1, 2), F(1)),
    7: (F(1691, 12), F(-539, 24), F(19, 12), F(-1, 24), F(121, 3), F(-9), F(1, 2),
        F(-9, 2), F(1, 2), F(1, 6), F(17, 2), F(-1), F(-1), F(-1, 2), F(1)),
    8: (F(763, 4), F(-659, 24), F(7, 4), F(-1, 24), F(299, 6), F(-10), F(1, 2),
        F(-5), F(1, 2), F(1, 6), F(19, 2), F(-1), F(-1), F(-1, 2), F(1)),
}


@dataclass(frozen=True)
class LebesgueRow:
    """One order of the published Lebesgue comparison table."""

    p: int
    alpha: float
    lambda_optimized: float
    lambda_alpha0: float
    lambda_equidistant: float
    stated_h: float          # the table's grid-spacing column
    effective_h: float       # spacing at which the warped-set values reproduce
    lambda_equidistant_external: float | None  # independent published value


LEBESGUE_TABLE = {
    1: LebesgueRow(1, 0.0, 1.0000, 1.0000, 1.0000, 0.01, 0.01, None),
    2: LebesgueRow(2, 0.0, 2.2000, 2.2000, 2.2000, 0.01, 0.01, None),
    3: LebesgueRow(3, 0.0, 4.2000, 4.2000, 3.8800, 0.01, 0.01, None),
    4: LebesgueRow(4, 0.0, 6.1240, 6.1240, 6.2384, 0.01, 0.01, None),
    5: LebesgueRow(5, 0.0, 8.6423, 8.6423, 10.9171, 0.01, 0.02, None),
    6: LebesgueRow(6, 1.5000, 12.0326, 12.1297, 19.1418, 0.02, 0.02, 19.22),
    7: LebesgueRow(7, 2.2500, 17.1032, 18.0971, 33.8915, 0.02, 0.01, 34.08),
    8: LebesgueRow(8, 1.8890, 23.9226, 26.0423, 60.5048, 0.02, 0.01, 60.86),
    9: LebesgueRow(9, 1.5000, 36.1110, 39.1431, 109.4267, 0.02, 0.02, 109.43),
    10: LebesgueRow(10, 1.5469, 53.3404, 57.7742, 194.8739, 0.04, 0.02, 198.08),
}


# Barycentric node tables of the optimized (alpha = 0) pentatope point sets.
REFERENCE_NODES_4D = {
    1: [
        (1.000000000000000, 0.0, 0.0, 0.0, 0.0),
        (0.0, 1.000000000000000, 0.0, 0.0, 0.0),
        (0.0, 0.0, 1.000000000000000, 0.0, 0.0),
        (0.0, 0.0, 0.0, 1.000000000000000, 0.0),
        (0.0, 0.0, 0.0, 0.0, 1.000000000000000),
    ],
    2: [
        (1.000000000000000, 0.0, 0.0, 0.0, 0.0),
        (0.500000000000000, 0.500000000000000, 0.0, 0.0, 0.0),
        (0.0, 1.000000000000000, 0.0, 0.0, 0.0),
        (0.500000000000000, 0.0, 0.500000000000000, 0.0, 0.0),
        (0.0, 0.500000000000000, 0.500000000000000, 0.0, 0.0),
        (0.0, 0.0, 1.000000000000000, 0.0, 0.0),
        (0.500000000000000, 0.0, 0.0, 0.500000000000000, 0.0),
        (0.0, 0.500000000000000, 0.0, 0.500000000000000, 0.0),
        (0.0, 0.0, 0.500000000000000, 0.500000000000000, 0.0),
        (0.0, 0.0, 0.0, 1.000000000000000, 0.0),
        (0.500000000000000, 0.0, 0.0, 0.0, 0.500000000000000),
        (0.0, 0.500000000000000, 0.0, 0.0, 0.500000000000000),
        (0.0, 0.0, 0.500000000000000, 0.0, 0.500000000000000),
        (0.0, 0.0, 0.0, 0.500000000000000, 0.500000000000000),
        (0.0, 0.0, 0.0, 0.0, 1.000000000000000),
    ],
    3: [
        (1.000000000000000, 0.0, 0.0, 0.0, 0.0),
        (0.723606797749979, 0.276393202250021, 0.0, 0.0, 0.0),
        (0.276393202250021, 0.723606797749979, 0.0, 0.0, 0.0),
        (0.0, 1.000000000000000, 0.0, 0.0, 0.0),
        (0.723606797749979, 0.0, 0.276393202250021, 0.0, 0.0),
        (0.333333333333333, 0.333333333333333, 0.333333333333333, 0.0, 0.0),
        (0.0, 0.723606797749979, 0.276393202250021, 0.0, 0.0),
        (0.276393202250021, 0.0, 0.723606797749979, 0.0, 0.0),
        (0.0, 0.276393202250021, 0.723606797749979, 0.0, 0.0),
        (0.0, 0.0, 1.000000000000000, 0.0, 0.0),
        (0.723606797749979, 0.0, 0.0, 0.276393202250021, 0.0),
        (0.333333333333333, 0.333333333333333, 0.0, 0.333333333333333, 0.0),
        (0.0, 0.723606797749979, 0.0, 0.276393202250021, 0.0),
        (0.333333333333333, 0.0, 0.333333333333333, 0.333333333333333, 0.0),
        (0.0, 0.333333333333333, 0.333333333333333, 0.333333333333333, 0.0),
        (0.0, 0.0, 0.723606797749979, 0.276393202250021, 0.0),
        (0.276393202250021, 0.0, 0.0, 0.723606797749979, 0.0),
        (0.0, 0.276393202250021, 0.0, 0.723606797749979, 0.0),
        (0.0, 0.0, 0.276393202250021, 0.723606797749979, 0.0),
        (0.0, 0.0, 0.0, 1.000000000000000, 0.0),
        (0.723606797749979, 0.0, 0.0, 0.0, 0.276393202250021),
        (0.333333333333333, 0.333333333333333, 0.0, 0.0, 0.333333333333333),
        (0.0, 0.723606797749979, 0.0, 0.0, 0.276393202250021),
        (0.333333333333333, 0.0, 0.333333333333333, 0.0, 0.333333333333333),
        (0.0, 0.333333333333333, 0.333333333333333, 0.0, 0.333333333333333),
        (0.0, 0.0, 0.723606797749979, 0.0, 0.276393202250021),
        (0.333333333333333, 0.0, 0.0, 0.333333333333333, 0.333333333333333),
        (0.0, 0.333333333333333, 0.0, 0.333333333333333, 0.333333333333333),
        (0.0, 0.0, 0.333333333333333, 0.333333333333333, 0.333333333333333),
        (0.0, 0.0, 0.0, 0.723606797749979, 0.276393202250021),
        (0.276393202250021, 0.0, 0.0, 0.0, 0.723606797749979),
        (0.0, 0.276393202250021, 0.0, 0.0, 0.723606797749979),
        (0.0, 0.0, 0.276393202250021, 0.0, 0.723606797749979),
        (0.0, 0.0, 0.0, 0.276393202250021, 0.723606797749979),
        (0.0, 0.0, 0.0, 0.0, 1.000000000000000),
    ],
    4: [
        (1.000000000000000, 0.0, 0.0, 0.0, 0.0),
        (0.827326835353989, 0.172673164646011, 0.0, 0.0, 0.0),
        (0.500000000000000, 0.500000000000000, 0.0, 0.0, 0.0),
        (0.172673164646011, 0.827326835353989, 0.0, 0.0, 0.0),
        (0.0, 1.000000000000000, 0.0, 0.0, 0.0),
        (0.827326835353989, 0.0, 0.172673164646011, 0.0, 0.0),
        (0.551551223569326, 0.224224388215337, 0.224224388215337, 0.0, 0.0),
        (0.224224388215337, 0.551551223569326, 0.224224388215337, 0.0, 0.0),
        (0.0, 0.827326835353989, 0.172673164646011, 0.0, 0.0),
        (0.500000000000000, 0.0, 0.500000000000000, 0.0, 0.0),
        (0.224224388215337, 0.224224388215337, 0.551551223569326, 0.0, 0.0),
        (0.0, 0.500000000000000, 0.500000000000000, 0.0, 0.0),
        (0.172673164646011, 0.0, 0.827326835353989, 0.0, 0.0),
        (0.0, 0.172673164646011, 0.827326835353988, 0.0, 0.0),
        (0.0, 0.0, 1.000000000000000, 0.0, 0.0),
        (0.827326835353989, 0.0, 0.0, 0.172673164646011, 0.0),
        (0.551551223569326, 0.224224388215337, 0.0, 0.224224388215337, 0.0),
        (0.224224388215337, 0.551551223569326, 0.0, 0.224224388215337, 0.0),
        (0.0, 0.827326835353989, 0.0, 0.172673164646011, 0.0),
        (0.551551223569326, 0.0, 0.224224388215337, 0.224224388215337, 0.0),
        (0.250000000000000, 0.250000000000000, 0.250000000000000, 0.250000000000000, 0.0),
        (0.0, 0.551551223569326, 0.224224388215337, 0.224224388215337, 0.0),
        (0.224224388215337, 0.0, 0.551551223569326, 0.224224388215337, 0.0),
        (0.0, 0.224224388215337, 0.551551223569326, 0.224224388215337, 0.0),
        (0.0, 0.0, 0.827326835353989, 0.172673164646011, 0.0),
        (0.500000000000000, 0.0, 0.0, 0.500000000000000, 0.0),
        (0.224224388215337, 0.224224388215337, 0.0, 0.551551223569326, 0.0),
        (0.0, 0.500000000000000, 0.0, 0.500000000000000, 0.0),
        (0.224224388215337, 0.0, 0.224224388215337, 0.551551223569326, 0.0),
        (0.0, 0.224224388215337, 0.224224388215337, 0.551551223569326, 0.0),
        (0.0, 0.0, 0.500000000000000, 0.500000000000000, 0.0),
        (0.172673164646011, 0.0, 0.0, 0.827326835353988, 0.0),
        (0.0, 0.172673164646011, 0.0, 0.827326835353988, 0.0),
        (0.0, 0.0, 0.172673164646011, 0.827326835353988, 0.0),
        (0.0, 0.0, 0.0, 1.000000000000000, 0.0),
        (0.827326835353989, 0.0, 0.0, 0.0, 0.172673164646011),
        (0.551551223569326, 0.224224388215337, 0.0, 0.0, 0.224224388215337),
        (0.224224388215337, 0.551551223569326, 0.0, 0.0, 0.224224388215337),
        (0.0, 0.827326835353989, 0.0, 0.0, 0.172673164646011),
        (0.551551223569326, 0.0, 0.224224388215337, 0.0, 0.224224388215337),
        (0.250000000000000, 0.250000000000000, 0.250000000000000, 0.0, 0.250000000000000),
        (0.0, 0.551551223569326, 0.224224388215337, 0.0, 0.224224388215337),
        (0.224224388215337, 0.0, 0.551551223569326, 0.0, 0.224224388215337),
        (0.0, 0.224224388215337, 0.551551223569326, 0.0, 0.224224388215337),
        (0.0, 0.0, 0.827326835353989, 0.0, 0.172673164646011),
        (0.551551223569326, 0.0, 0.0, 0.224224388215337, 0.224224388215337),
        (0.250000000000000, 0.250000000000000, 0.0, 0.250000000000000, 0.250000000000000),
        (0.0, 0.551551223569326, 0.0, 0.224224388215337, 0.224224388215337),
        (0.250000000000000, 0.0, 0.250000000000000, 0.250000000000000, 0.250000000000000),
        (0.0, 0.250000000000000, 0.250000000000000, 0.250000000000000, 0.250000000000000),
        (0.0, 0.0, 0.551551223569326, 0.224224388215337, 0.224224388215337),
        (0.224224388215337, 0.0, 0.0, 0.551551223569326, 0.224224388215337),
        (0.0, 0.224224388215337, 0.0, 0.551551223569326, 0.224224388215337),
        (0.0, 0.0, 0.224224388215337, 0.551551223569326, 0.224224388215337),
        (0.0, 0.0, 0.0, 0.827326835353989, 0.172673164646011),
        (0.500000000000000, 0.0, 0.0, 0.0, 0.500000000000000),
        (0.224224388215337, 0.224224388215337, 0.0, 0.0, 0.551551223569326),
        (0.0, 0.500000000000000, 0.0, 0.0, 0.500000000000000),
        (0.224224388215337, 0.0, 0.224224388215337, 0.0, 0.551551223569326),
        (0.0, 0.224224388215337, 0.224224388215337, 0.0, 0.551551223569326),
        (0.0, 0.0, 0.500000000000000, 0.0, 0.500000000000000),
        (0.224224388215337, 0.0, 0.0, 0.224224388215337, 0.551551223569326),
        (0.0, 0.224224388215337, 0.0, 0.224224388215337, 0.551551223569326),
        (0.0, 0.0, 0.224224388215337, 0.224224388215337, 0.551551223569326),
        (0.0, 0.0, 0.0, 0.500000000000000, 0.500000000000000),
        (0.172673164646011, 0.0, 0.0, 0.0, 0.827326835353989),
        (0.0, 0.172673164646011, 0.0, 0.0, 0.827326835353989),
        (0.0, 0.0, 0.172673164646011, 0.0, 0.827326835353989),
        (0.0, 0.0, 0.0, 0.172673164646011, 0.827326835353989),
        (0.0, 0.0, 0.0, 0.0, 1.000000000000000),
    ],
}
