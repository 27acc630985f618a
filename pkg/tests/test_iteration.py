"""Tests for the Halley and Fritsch refinement steps and the driver."""

import math

import numpy as np
import pytest

from lambertw import (
    DomainError,
    MINUS_INV_E,
    SingularityError,
    defining_residual,
    fritsch_step,
    halley_step,
    iterate,
    lambert_w_approximation,
    reference_w,
)

# x values (with their branch) used for the empirical order-of-convergence
# checks: two lower-branch points and four principal-branch points spread
# over the dispatch regions.
ORDER_POINTS = [(-1, -0.3), (-1, -0.1), (0, 0.5), (0, 1.0), (0, 10.0), (0, 1000.0)]


# ----------------------------------------------------------------------
# single steps


def test_halley_exact_root_is_fixed():
    assert halley_step(math.e, 1.0) == 1.0


def test_halley_hand_value_from_zero_seed():
    # t = -1, s = 1, u = 1: update = 0 + (-1)/(-1 - 1) = 0.5.
    assert halley_step(1.0, 0.0) == 0.5


def test_halley_one_step_from_coarse_seed():
    assert halley_step(1.0, 0.5) == pytest.approx(0.5671433, abs=1e-3)


def test_fritsch_exact_root_is_fixed():
    assert fritsch_step(math.e, 1.0) == 1.0


def test_fritsch_hand_value():
    # z = ln(1/0.5) - 0.5, q = 2*1.5*(1.5 + (2/3)z); one step from the
    # half-accurate seed already lands within ~2e-6 of W0(1).
    value = fritsch_step(1.0, 0.5)
    assert value == pytest.approx(0.5671455, abs=1e-6)
    z = math.log(2.0) - 0.5
    q = 2.0 * 1.5 * (1.5 + 2.0 * z / 3.0)
    assert z == pytest.approx(0.1931472, abs=1e-7)
    assert q == pytest.approx(4.8862944, abs=1e-7)
    expected = 0.5 * (1.0 + (z / 1.5) * (q - z) / (q - 2.0 * z))
    assert value == expected


def test_fritsch_lower_branch_step():
    assert fritsch_step(-0.1, -3.5) == pytest.approx(-3.5771521, abs=1e-6)


@pytest.mark.parametrize("branch, x", ORDER_POINTS)
def test_fixed_point_stays_put(branch, x):
    """The exact root is a fixed point up to the step's own rounding.

    Both schemes divide by 1 + w, which amplifies the rounding noise of
    the residual terms by 1/|1+w|; the drift allowance grows by that
    factor (a flat 2 ulp is only achievable when |1+w| >= 1).
    """
    w = reference_w(branch, x)
    allowance = (2.0 + 1.0 / abs(1.0 + w)) * math.ulp(abs(w))
    for step in (halley_step, fritsch_step):
        assert abs(step(x, w) - w) <= allowance


@pytest.mark.parametrize(
    "step, low, high",
    [
        (halley_step, 1e2, 1e4),     # third order: ratio ~ 10^3
        (fritsch_step, 1e3, 1e5),    # fourth order: ratio ~ 10^4
    ],
)
def test_empirical_convergence_order(step, low, high):
    """Error ratios for delta = 1e-2 vs 1e-3 seeds match the scheme order.

    A step of order p maps a relative seed error delta to ~C*delta^p, so
    the two errors should differ by ~10^p, within a factor of 10.
    """
    for branch, x in ORDER_POINTS:
        w = reference_w(branch, x)
        errors = [abs(step(x, w * (1 + d)) - w) for d in (1e-2, 1e-3)]
        ratio = errors[0] / errors[1]
        assert low <= ratio <= high, f"x={x}: ratio {ratio:.1f} outside [{low}, {high}]"


def test_singularity_guards():
    with pytest.raises(SingularityError):
        halley_step(MINUS_INV_E, -1.0)
    with pytest.raises(SingularityError):
        fritsch_step(MINUS_INV_E, -1.0 + 1e-13)
    with pytest.raises(DomainError):
        fritsch_step(1.0, -0.5)  # x/w < 0
    with pytest.raises(DomainError):
        fritsch_step(1.0, 0.0)


# ----------------------------------------------------------------------
# iterate driver


def test_iterate_trivial_seed_is_length_one_trace():
    trace = iterate(math.e, 1.0, scheme="fritsch", tol=1e-14, max_steps=8)
    assert trace.converged
    assert len(trace.steps) == 1
    assert trace.refinements == 0
    assert trace.value == 1.0


def test_iterate_halley_needs_extra_step_at_20():
    seed = lambert_w_approximation(0, 20.0)
    trace = iterate(20.0, seed, scheme="halley", tol=1e-14, max_steps=8)
    assert trace.converged
    assert 1 <= trace.refinements <= 2


def test_iterate_fritsch_single_step_at_20():
    seed = lambert_w_approximation(0, 20.0)
    trace = iterate(20.0, seed, scheme="fritsch", tol=1e-14, max_steps=8)
    assert trace.converged
    assert trace.refinements == 1


def test_iterate_records_every_iterate_with_residuals():
    trace = iterate(10.0, 1.0, scheme="halley", tol=1e-14, max_steps=8)
    assert trace.converged
    assert trace.steps[0][0] == 1.0
    residuals = [r for _, r in trace.steps]
    assert residuals[0] == defining_residual(10.0, 1.0)
    assert residuals[-1] <= 1e-14 * 10.0


def test_iterate_exhaustion_reports_not_converged():
    trace = iterate(1.0, 5.0, scheme="halley", tol=1e-16, max_steps=1)
    assert not trace.converged
    assert len(trace.steps) == 2  # seed + the one allowed step


def test_iterate_validates_arguments():
    with pytest.raises(ValueError):
        iterate(1.0, 0.5, scheme="newton", tol=1e-14, max_steps=8)
    with pytest.raises(ValueError):
        iterate(1.0, 0.5, scheme="fritsch", tol=-1.0, max_steps=8)
    with pytest.raises(ValueError):
        iterate(1.0, 0.5, scheme="fritsch", tol=1e-14, max_steps=0)


@pytest.mark.parametrize(
    "branch, xs",
    [
        (0, np.linspace(MINUS_INV_E + 1e-6, 0.3, 150)),
        (0, np.geomspace(0.3, 1e5, 150)),
        (-1, np.linspace(MINUS_INV_E + 1e-6, -1e-6, 150)),
    ],
)
def test_iterate_round_trip_residual(branch, xs):
    for x in xs:
        x = float(x)
        seed = lambert_w_approximation(branch, x)
        trace = iterate(x, seed, scheme="fritsch", tol=1e-14, max_steps=8)
        assert trace.converged
        assert defining_residual(x, trace.value) <= 1e-14 * max(abs(x), 1.0)
