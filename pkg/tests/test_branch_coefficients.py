"""Tests for the exact series-reversion of the branch-point expansion.

The expansion W = sum_i b_i p^i with p = +-sqrt(2(1 + e x)) has exactly
known rational coefficients.  ``derive_branch_coefficients`` recomputes
them by reverting the Taylor series of the defining relation in exact
Fraction arithmetic; its output anchors the frozen float table used at
evaluation time.
"""

import math
from fractions import Fraction

import pytest

from lambertw import BRANCH_POINT_COEFFICIENTS, MAX_SERIES_ORDER, derive_branch_coefficients

# Exact rational values of b0..b7.
EXACT_TABLE = [
    Fraction(-1),
    Fraction(1),
    Fraction(-1, 3),
    Fraction(11, 72),
    Fraction(-43, 540),
    Fraction(769, 17280),
    Fraction(-221, 8505),
    Fraction(680863, 43545600),
]


def test_lowest_order_is_square_root_behavior():
    assert derive_branch_coefficients(1) == [Fraction(-1), Fraction(1)]


def test_first_four_coefficients():
    assert derive_branch_coefficients(3) == EXACT_TABLE[:4]


def test_published_table_exact_as_rationals():
    derived = derive_branch_coefficients(7)
    assert derived == EXACT_TABLE
    assert derived[7] == Fraction(680863, 43545600)


def test_results_are_fractions():
    assert all(isinstance(b, Fraction) for b in derive_branch_coefficients(5))


def test_frozen_float_table_matches_reversion():
    """Every frozen coefficient is the reversion result, correctly rounded."""
    derived = derive_branch_coefficients(MAX_SERIES_ORDER)
    assert len(BRANCH_POINT_COEFFICIENTS) == MAX_SERIES_ORDER + 1
    for i, frozen in enumerate(BRANCH_POINT_COEFFICIENTS):
        exact_as_float = float(derived[i])
        assert abs(frozen - exact_as_float) <= math.ulp(abs(exact_as_float)), (
            f"b{i}: frozen {frozen!r} vs derived {exact_as_float!r}"
        )
    # The published entries must agree bit-for-bit.
    for i in range(8):
        assert BRANCH_POINT_COEFFICIENTS[i] == float(EXACT_TABLE[i])


def test_order_bounds():
    assert len(derive_branch_coefficients(12)) == 13
    with pytest.raises(ValueError):
        derive_branch_coefficients(13)
    with pytest.raises(ValueError):
        derive_branch_coefficients(-1)
