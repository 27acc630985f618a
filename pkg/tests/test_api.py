"""Tests for the public evaluation entry points and region dispatch."""

import math

import numpy as np
import pytest

from lambertw import (
    Branch,
    DomainError,
    EvalResult,
    MINUS_INV_E,
    W0_REGIONS,
    WM1_REGIONS,
    defining_residual,
    dispatch_region,
    lambert_w,
    lambert_w0,
    lambert_w0_approximation,
    lambert_wm1,
    lambert_wm1_approximation,
    lambert_w_approximation,
    reference_w,
)


# ----------------------------------------------------------------------
# golden evaluations


def test_zero_is_exact():
    result = lambert_w(0, 0.0)
    assert result.value == 0.0
    assert result.refinement_steps == 0
    assert result.residual == 0.0


def test_w0_at_e():
    assert lambert_w(0, math.e).value == pytest.approx(1.0, abs=4e-16)


def test_w0_at_one():
    assert lambert_w(0, 1.0).value == pytest.approx(0.5671432904097838, abs=1e-15)
    assert lambert_w0(1.0) == lambert_w(0, 1.0).value


def test_wm1_golden():
    assert lambert_w(-1, -0.1).value == pytest.approx(-3.5771520639572972, abs=1e-14)
    assert lambert_wm1(-0.1) == lambert_w(-1, -0.1).value


def test_branch_point_returns_minus_one_exactly():
    for branch in (0, -1):
        assert lambert_w(branch, MINUS_INV_E).value == -1.0


# ----------------------------------------------------------------------
# initial approximation entry point


def test_approximation_golden():
    assert lambert_w_approximation(0, MINUS_INV_E) == -1.0
    assert lambert_w_approximation(0, 1.0) == pytest.approx(0.5671432904097838, abs=1e-5)
    ref = reference_w(-1, -0.25)
    assert ref == pytest.approx(-2.1532923, abs=1e-6)
    assert lambert_w_approximation(-1, -0.25) == pytest.approx(ref, abs=1e-5)


def test_static_branch_wrappers_agree():
    assert lambert_w0_approximation(2.0) == lambert_w_approximation(0, 2.0)
    assert lambert_wm1_approximation(-0.2) == lambert_w_approximation(-1, -0.2)
    assert lambert_w0(2.0) == lambert_w(0, 2.0).value
    assert lambert_wm1(-0.2) == lambert_w(-1, -0.2).value


def test_approximation_at_infinity():
    assert lambert_w_approximation(0, math.inf) == math.inf
    assert lambert_w(0, math.inf).value == math.inf


# ----------------------------------------------------------------------
# region dispatch


def test_dispatch_is_total_and_unique():
    xs = np.concatenate(
        [
            np.linspace(MINUS_INV_E, 0.3, 500),
            np.geomspace(0.3, 1e8, 500),
        ]
    )
    for x in xs:
        x = float(x)
        hits = [r for r in W0_REGIONS if x in r]
        assert len(hits) == 1
        assert dispatch_region(0, x) == hits[0]
    xs = np.linspace(MINUS_INV_E, -1e-9, 500)
    for x in xs:
        x = float(x)
        hits = [r for r in WM1_REGIONS if x in r]
        assert len(hits) == 1
        assert dispatch_region(-1, x) == hits[0]


def test_region_kinds_in_order():
    assert [r.kind for r in W0_REGIONS] == [
        "branch-point-series",
        "rational-fit-1",
        "rational-fit-2",
        "asymptotic",
    ]
    assert [r.kind for r in WM1_REGIONS] == [
        "branch-point-series",
        "rational-fit-1",
        "continued-log",
    ]


def test_eval_result_reports_region_and_steps():
    result = lambert_w(0, 1.0)
    assert isinstance(result, EvalResult)
    assert result.region == "rational-fit-2"
    assert result.refinement_steps == 1
    assert result.residual <= 1e-14
    assert lambert_w(0, 0.1).region == "rational-fit-1"
    assert lambert_w(0, 100.0).region == "asymptotic"
    assert lambert_w(-1, -0.01).region == "continued-log"


# ----------------------------------------------------------------------
# domain handling


@pytest.mark.parametrize(
    "branch, x",
    [
        (0, -1.0),
        (0, MINUS_INV_E - 1e-9),
        (-1, MINUS_INV_E - 1e-9),
        (-1, 0.0),
        (-1, 1e-9),
        (0, -math.inf),
        (-1, math.inf),
        (0, math.nan),
        (-1, math.nan),
    ],
)
def test_domain_errors(branch, x):
    with pytest.raises(DomainError):
        lambert_w(branch, x)
    with pytest.raises(DomainError):
        lambert_w_approximation(branch, x)


def test_domain_error_names_the_bound():
    with pytest.raises(DomainError, match="-1/e"):
        lambert_w(0, -1.0)
    with pytest.raises(DomainError, match="x < 0"):
        lambert_w(-1, 0.5)


def test_within_four_ulp_below_branch_point_is_clamped():
    x = MINUS_INV_E - 2 * math.ulp(math.exp(-1))
    for branch in (0, -1):
        assert lambert_w(branch, x).value == -1.0


# ----------------------------------------------------------------------
# analytic properties


def test_branch_ranges():
    for x in np.linspace(MINUS_INV_E, 10.0, 300):
        assert lambert_w(0, float(x)).value >= -1.0
    for x in np.linspace(MINUS_INV_E, -1e-6, 300):
        assert lambert_w(-1, float(x)).value <= -1.0


def test_strict_monotonicity():
    # Skip the first log point: it duplicates the linear panel's endpoint.
    xs = np.concatenate(
        [np.linspace(MINUS_INV_E + 1e-9, 0.3, 300), np.geomspace(0.3, 1e5, 300)[1:]]
    )
    values = [lambert_w(0, float(x)).value for x in xs]
    assert all(a < b for a, b in zip(values, values[1:]))
    xs = np.concatenate(
        [np.linspace(MINUS_INV_E + 1e-9, -1e-6, 300), -np.geomspace(1e-6, 1e-12, 300)[1:]]
    )
    values = [lambert_w(-1, float(x)).value for x in xs]
    assert all(a > b for a, b in zip(values, values[1:]))


@pytest.mark.parametrize(
    "branch, ws",
    [
        (0, np.linspace(-1.0, 10.0, 200)),
        (-1, np.linspace(-20.0, -1.0, 200)),
    ],
)
def test_inverse_composition(branch, ws):
    """lambert_w(b, w*e^w) recovers w."""
    for w in ws:
        w = float(w)
        x = w * math.exp(w)
        if branch == -1 and x >= 0.0:  # w = -1 endpoint rounds to x = -1/e
            continue
        value = lambert_w(branch, x).value
        assert abs(value - w) <= 1e-14 * max(abs(w), 1.0) + 4 * math.ulp(1.0)


def test_defining_identity_spot_grid():
    for x in np.geomspace(1e-3, 1e8, 300):
        result = lambert_w(0, float(x))
        assert result.residual <= 1e-14 * max(abs(x), 1.0)
    for x in -np.geomspace(1e-12, 0.999 / math.e, 300):
        result = lambert_w(-1, float(x))
        assert result.residual <= 1e-14 * max(abs(x), 1.0)


def test_residual_field_matches_defining_residual():
    result = lambert_w(0, 7.5)
    assert result.residual == defining_residual(7.5, result.value)
