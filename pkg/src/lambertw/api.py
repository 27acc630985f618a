"""Public evaluation entry points and region dispatch.

The evaluation strategy follows a fixed recipe: pick the initial
approximation whose region contains x, apply one Fritsch step, verify
the defining residual |w*e^w - x| <= 1e-14 * max(|x|, 1), and fall back
to at most three more steps if the check fails (it does not in practice;
the fallback is insurance, not a tuning knob).

Three call shapes are exposed:

* ``lambert_w0(x)`` / ``lambert_wm1(x)`` return the value alone;
* ``lambert_w0_approximation(x)`` / ``lambert_wm1_approximation(x)``
  return the unrefined dispatch approximation;
* ``lambert_w(branch, x)`` resolves the branch at runtime and returns an
  :class:`EvalResult` carrying diagnostics.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .approx import (
    ApproximationRegion,
    MINUS_INV_E,
    BRANCH_POINT_TOL,
    W0_FIT_1,
    W0_FIT_2,
    WM1_FIT,
    asymptotic_series,
    branch_point_series,
    continued_log_recursion_wm1,
    rational_fit_eval,
)
from .branches import Branch
from .errors import DomainError
from .iteration import SINGULARITY_GUARD, defining_residual, fritsch_step

# Residual acceptance scale for refined results.
RESIDUAL_TOL = 1e-14

# Region breakpoints: where adjacent approximations cross in accuracy.
# Printed to six decimals; the trailing digits are zeros by convention.
_W0_SERIES_END = -0.323581
_W0_FIT1_END = 0.145469
_W0_FIT2_END = 8.706658
# The branch -1 series here runs at order 11 (see _SERIES_ORDER), which
# pushes its five-decimal range past the order-9 crossing near -0.302985.
# The rational fit only reaches five decimals right of -0.3005, so the
# handoff sits at the measured order-11 crossing; both sides hold
# delta >= 5.36 there.
_WM1_SERIES_END = -0.298147
_WM1_FIT_END = -0.051012

W0_REGIONS: tuple[ApproximationRegion, ...] = (
    ApproximationRegion(Branch.PRINCIPAL, MINUS_INV_E, _W0_SERIES_END, "branch-point-series"),
    ApproximationRegion(Branch.PRINCIPAL, _W0_SERIES_END, _W0_FIT1_END, "rational-fit-1"),
    ApproximationRegion(Branch.PRINCIPAL, _W0_FIT1_END, _W0_FIT2_END, "rational-fit-2"),
    ApproximationRegion(Branch.PRINCIPAL, _W0_FIT2_END, math.inf, "asymptotic"),
)

WM1_REGIONS: tuple[ApproximationRegion, ...] = (
    ApproximationRegion(Branch.LOWER, MINUS_INV_E, _WM1_SERIES_END, "branch-point-series"),
    ApproximationRegion(Branch.LOWER, _WM1_SERIES_END, _WM1_FIT_END, "rational-fit-1"),
    ApproximationRegion(Branch.LOWER, _WM1_FIT_END, 0.0, "continued-log"),
)


@dataclass(frozen=True)
class EvalResult:
    """Refined evaluation with diagnostics.

    value : the branch value W(x)
    region : kind of the initial approximation that seeded the result
    refinement_steps : Fritsch steps actually applied (0 for the exact
        special cases x = 0 and the branch point)
    residual : |value * exp(value) - x| as last checked
    """

    value: float
    region: str
    refinement_steps: int
    residual: float


def _check_domain(b: Branch, x: float) -> None:
    if math.isnan(x):
        raise DomainError("x is NaN, outside both branch domains")
    if x < MINUS_INV_E - BRANCH_POINT_TOL:
        raise DomainError(
            f"x = {x!r} is below the branch point bound -1/e = {MINUS_INV_E!r}"
        )
    if b is Branch.LOWER and x >= 0.0:
        raise DomainError(f"branch -1 requires -1/e <= x < 0, got x = {x!r}")


def dispatch_region(branch: int, x: float) -> ApproximationRegion:
    """Region of the dispatch table that evaluates x on this branch."""
    b = Branch(branch)
    _check_domain(b, x)
    if x < MINUS_INV_E:
        x = MINUS_INV_E
    regions = W0_REGIONS if b is Branch.PRINCIPAL else WM1_REGIONS
    if b is Branch.PRINCIPAL and math.isinf(x):
        return regions[-1]
    for region in regions:
        if x in region:
            return region
    raise AssertionError(f"dispatch table has a gap at x = {x!r}")


# Series order used by the dispatcher.  Branch -1 runs two orders hotter
# because its series region extends to p = -0.594, where the order-9
# truncation error is a shade above the five-decimal promise.
_SERIES_ORDER = {Branch.PRINCIPAL: 9, Branch.LOWER: 11}


def _approximation(b: Branch, x: float, region: ApproximationRegion) -> float:
    kind = region.kind
    if kind == "branch-point-series":
        return branch_point_series(b, x, order=_SERIES_ORDER[b])
    if kind == "rational-fit-1":
        fit = W0_FIT_1 if b is Branch.PRINCIPAL else WM1_FIT
        return rational_fit_eval(fit, x)
    if kind == "rational-fit-2":
        return rational_fit_eval(W0_FIT_2, x)
    if kind == "asymptotic":
        return asymptotic_series(b, x)
    return continued_log_recursion_wm1(x)


def lambert_w_approximation(branch: int, x: float) -> float:
    """Initial approximation only: piecewise dispatch, no refinement.

    Accurate to at least five decimal places (three beyond x ~ 7 on the
    principal branch); intended as the seed for one refinement step or
    for throughput-critical callers that can live with that accuracy.
    """
    b = Branch(branch)
    _check_domain(b, x)
    if b is Branch.PRINCIPAL and math.isinf(x):
        return math.inf
    region = dispatch_region(b, x)
    return _approximation(b, x if x > MINUS_INV_E else MINUS_INV_E, region)


def lambert_w0_approximation(x: float) -> float:
    """Principal branch initial approximation (static branch form)."""
    return lambert_w_approximation(Branch.PRINCIPAL, x)


def lambert_wm1_approximation(x: float) -> float:
    """Branch -1 initial approximation (static branch form)."""
    return lambert_w_approximation(Branch.LOWER, x)


def lambert_w(branch: int, x: float) -> EvalResult:
    """Lambert W with runtime branch selection and diagnostics.

    Raises DomainError outside the branch domain (NaN and -inf
    included).  x = +inf on branch 0 returns +inf with a NaN residual,
    the one place the defining identity cannot be formed.
    """
    b = Branch(branch)
    _check_domain(b, x)
    if b is Branch.PRINCIPAL and math.isinf(x):
        return EvalResult(math.inf, "asymptotic", 0, math.nan)
    region = dispatch_region(b, x)
    if x < MINUS_INV_E or x == MINUS_INV_E:
        # At (or within rounding of) the branch point the value is -1.
        return EvalResult(-1.0, region.kind, 0, defining_residual(x, -1.0))
    if b is Branch.PRINCIPAL and x == 0.0:
        return EvalResult(0.0, region.kind, 0, 0.0)
    w = _approximation(b, x, region)
    if abs(w + 1.0) < SINGULARITY_GUARD:
        # Too close to the branch point to refine; series is exact here.
        return EvalResult(w, region.kind, 0, defining_residual(x, w))
    tol = RESIDUAL_TOL * max(abs(x), 1.0)
    steps = 0
    while True:
        w = fritsch_step(x, w)
        steps += 1
        residual = defining_residual(x, w)
        if residual <= tol or steps >= 4:
            break
    return EvalResult(w, region.kind, steps, residual)


def lambert_w0(x: float) -> float:
    """Principal branch value W_0(x), defined on [-1/e, inf)."""
    return lambert_w(Branch.PRINCIPAL, x).value


def lambert_wm1(x: float) -> float:
    """Lower branch value W_-1(x), defined on [-1/e, 0)."""
    return lambert_w(Branch.LOWER, x).value
