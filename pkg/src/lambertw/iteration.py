"""One-step refinements of Lambert W estimates and a driver loop.

Both steps take the point x and the current estimate w and return an
improved estimate:

* ``halley_step`` is third order and needs one exp per call;
* ``fritsch_step`` is fourth order, needs one log per call, and in
  practice turns any five-decimal initial guess into a result at the
  rounding floor, which is why the evaluation path defaults to it.

Neither step is defined at w = -1 (the derivative of w*e^w vanishes);
estimates within 1e-12 of that point must not be refined at all, since
only the branch point series is trustworthy there.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, SingularityError

# Estimates closer to w = -1 than this are considered to sit on the
# branch point singularity; refinement is refused (and not needed, the
# series is already at machine accuracy there).
SINGULARITY_GUARD = 1e-12

# Residual floor used so that a relative tolerance keeps meaning for
# arguments arbitrarily close to zero.
_RESIDUAL_FLOOR = 1e-300

SCHEMES = ("halley", "fritsch")


def defining_residual(x: float, w: float) -> float:
    """|w*exp(w) - x|, safe against overflow of the product for large w."""
    if w > 1.0 and x > math.e:
        return abs(x * math.expm1(w + math.log(w / x)))
    return abs(w * math.exp(w) - x)


def halley_step(x: float, w: float) -> float:
    """One Halley iteration for w*e^w = x (third order).

    Uses t = w*e^w - x, s = (w+2)/(2*(w+1)), u = (w+1)*e^w and updates
    w <- w + t/(t*s - u).
    """
    if abs(w + 1.0) < SINGULARITY_GUARD:
        raise SingularityError(
            f"halley step undefined within {SINGULARITY_GUARD} of w = -1, got w = {w!r}"
        )
    ew = math.exp(w)
    t = w * ew - x
    s = (w + 2.0) / (2.0 * (w + 1.0))
    u = (w + 1.0) * ew
    return w + t / (t * s - u)


def fritsch_step(x: float, w: float) -> float:
    """One Fritsch iteration for w*e^w = x (fourth order).

    With z = ln(x/w) - w, q = 2*(1+w)*(1+w+(2/3)*z) and
    eps = (z/(1+w)) * (q-z)/(q-2z), updates w <- w*(1+eps).  Requires x
    and w of equal sign (true for every in-branch estimate except the
    removable point x = w = 0, which callers short-circuit).
    """
    if abs(w + 1.0) < SINGULARITY_GUARD:
        raise SingularityError(
            f"fritsch step undefined within {SINGULARITY_GUARD} of w = -1, got w = {w!r}"
        )
    if w == 0.0 or x / w <= 0.0:
        raise DomainError(
            f"fritsch step needs x and w of equal sign, got x = {x!r}, w = {w!r}"
        )
    z = math.log(x / w) - w
    q = 2.0 * (1.0 + w) * (1.0 + w + (2.0 / 3.0) * z)
    denom = q - 2.0 * z
    if abs(denom) < 1e-300:
        raise SingularityError(
            f"fritsch step denominator underflow at x = {x!r}, w = {w!r}"
        )
    eps = (z / (1.0 + w)) * ((q - z) / denom)
    return w * (1.0 + eps)


_STEP_FUNCTIONS = {"halley": halley_step, "fritsch": fritsch_step}


@dataclass
class IterationTrace:
    """Record of a refinement run.

    ``steps`` holds every iterate including the seed, paired with its
    defining residual; ``converged`` says whether the last residual met
    the tolerance.
    """

    scheme: str
    steps: list[tuple[float, float]]
    converged: bool

    @property
    def value(self) -> float:
        return self.steps[-1][0]

    @property
    def refinements(self) -> int:
        return len(self.steps) - 1


def iterate(
    x: float,
    w0: float,
    scheme: str = "fritsch",
    tol: float = 1e-14,
    max_steps: int = 8,
) -> IterationTrace:
    """Refine w0 until |w*e^w - x| <= tol * max(|x|, 1e-300).

    The seed is recorded (and may already satisfy the tolerance, giving
    a trace of length one); afterwards at most ``max_steps`` scheme
    steps are applied.  No exception on non-convergence: the trace says
    so and keeps the best iterate last.
    """
    if scheme not in _STEP_FUNCTIONS:
        raise ValueError(f"scheme must be one of {SCHEMES}, got {scheme!r}")
    if not tol > 0.0:
        raise ValueError(f"tol must be positive, got {tol!r}")
    if max_steps < 1:
        raise ValueError(f"max_steps must be >= 1, got {max_steps}")
    step = _STEP_FUNCTIONS[scheme]
    limit = tol * max(abs(x), _RESIDUAL_FLOOR)
    w = w0
    r = defining_residual(x, w)
    steps = [(w, r)]
    converged = r <= limit
    while not converged and len(steps) <= max_steps:
        w = step(x, w)
        r = defining_residual(x, w)
        steps.append((w, r))
        converged = r <= limit
    return IterationTrace(scheme=scheme, steps=steps, converged=converged)
