"""Published isomorphism-class tables for the facets of tau_6, tau_7 and tau_8.

Each row is (standard-form representative in colex order, class size, degree).
Rows are listed in the published order.  That order is ascending
lexicographic in the representatives, except that two adjacent pairs of
TAU8 rows (3/4 and 7/8, counting from 0) appear swapped.  The degree column
of those four rows as published follows ascending order, so as printed it
pairs each of those representatives with its neighbour's degree.
"""
from __future__ import annotations

from math import factorial

TAU6 = [
    ((1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0), 15, 32),
    ((1, 1, 0, 1, 0, 0, 1, 0, 0, 0, -1, 0, 0, 0, 0), 30, 14),
    ((2, 2, 2, -1, -1, -1, -1, -1, -1, 2, -1, -1, -1, 2, 2), 10, 57),
    ((2, 2, 2, 2, 2, 2, -1, -1, -1, -1, -1, -1, -1, -1, 2), 15, 32),
]

TAU7 = [
    ((1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0), 21, 340),
    ((1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 0, 1, 1, 1, -1, -1, 0, 0, 0, 0, 1), 420, 20),
    ((1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0), 42, 75),
    ((2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, -1, 1, 1, 1, 1), 105, 75),
    ((2, 2, 2, 2, 2, 2, -1, -1, -1, -1, -1, -1, -1, -1, 2, -1, -1, -1, -1, 2, 2), 35, 340),
    ((2, 2, 2, 2, 2, 2, 2, 2, 2, 2, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, 2), 21, 75),
    ((4, 4, -2, 1, 1, 1, 1, 1, 1, -2, -2, 4, -2, 1, 1, -2, -2, 4, 1, 1, 4), 252, 20),
]

TAU8 = [
    ((1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0), 28, 18848),
    ((1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 1, 1, 1), 560, 82),
    ((1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 0, 1, 1, 1, -1, 0, 1, 1, -1, 1, 0, -1, 0, 0, 0, 0, 1, 1), 3360, 52),
    ((1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0), 56, 82),
    ((1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 1, 1, 1, -1, -1, 0, 0, 0, 0, 0, 1), 840, 902),
    ((2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, -1, 1, 1, 1, 1, 1), 168, 1580),
    ((2, 1, 1, 0, 0, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, -1, 0, 0, 0, -1, -1, 0, 1, 1, 1, 1), 3360, 125),
    ((2, 1, 1, 1, 1, 0, 1, 1, 0, 0, 1, 1, 0, 0, 0, 0, 0, 1, 1, 1, -1, -1, -1, 0, 0, 0, 0, 1), 3360, 245),
    ((2, 1, 1, 1, 1, 0, 1, 1, 0, 0, 1, 1, 0, 0, 0, -1, -1, 0, 0, 0, 0, -1, -1, 0, 0, 0, 0, 2), 420, 27),
    ((2, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, -1, -1, 1, 1, 1, 1), 280, 347),
    ((2, 2, 2, 2, 2, 2, -1, -1, -1, -1, -1, -1, -1, -1, 2, -1, -1, -1, -1, 2, 2, -1, -1, -1, -1, 2, 2, 2), 35, 11878),
    ((2, 2, 2, 2, 2, 2, 2, 2, 2, 2, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, 2, -1, -1, -1, -1, -1, 2, 2), 56, 4641),
    ((2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, 2), 28, 245),
    ((3, 2, 1, 2, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, -1, 0, 0, 0, 0, -2, -1, 0, 0, 2, 2, 2), 10080, 27),
    ((4, 4, -2, 1, 1, 1, 1, 1, 1, 4, 1, 1, 1, -2, -2, -2, 4, -2, 1, 1, 1, -2, -2, 4, 1, 1, 1, 4), 2016, 95),
    ((4, 4, 4, 4, 4, -2, 1, 1, 1, 1, 1, 1, 1, 1, -2, -2, -2, 4, -2, 1, 1, -2, -2, -2, 4, 1, 1, 4), 5040, 60),
    ((5, 5, 2, 2, -1, -1, 2, -1, -1, 2, -1, 2, 2, -1, -1, -1, 2, 2, -1, -1, 2, -4, -1, -1, 2, 2, 5, 5), 2520, 109),
    ((7, 7, 4, 4, 1, 1, 4, 1, 1, -2, 1, 4, -2, 1, 1, 1, -2, 4, 1, 1, -2, -5, -2, -2, 1, 1, 4, 4), 10080, 27),
    ((8, 5, -1, 5, -1, 2, 2, 2, 5, 5, 2, 2, -1, -1, -4, -4, 2, -1, -1, 2, 2, -4, -4, 5, 5, 2, 2, 8), 10080, 27),
]

TOTALS = {5: 10, 6: 70, 7: 896, 8: 52367}

#: The automorphism-free facet normal of tau_9 given in the text.
TAU9_ASYMMETRIC = (4, 2, 2, 2, 0, 0, 1, 1, -1, 1, 1, -1, -1, 1, 2, 0, 0, 2, 0, -1, 1, -1,
                   1, 1, -1, 0, 0, 1, -2, -2, 0, 2, 1, 3, 2, 3)

TABLES = {6: TAU6, 7: TAU7, 8: TAU8}


def stabilizer_orders(n: int) -> list[int]:
    return [factorial(n) // count for _, count, _ in TABLES[n]]
