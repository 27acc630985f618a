"""Closed-form inverses of two shower-physics profile functions.

Both the Moyal function and the one-parameter Gaisser-Hillas profile
can be inverted exactly in terms of the two real Lambert W branches:
the principal branch selects the solution on one side of the profile
maximum, the lower branch the other side.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .api import lambert_w0, lambert_wm1
from .errors import DomainError

# Peak value of the Moyal function, attained at x = 0.
MOYAL_PEAK = math.exp(-0.5)
_MOYAL_PEAK_TOL = 4.0 * math.ulp(MOYAL_PEAK)

MOYAL_SIDES = ("plus", "minus")


def moyal(x: float) -> float:
    """Un-normalized Moyal function exp(-(x + e^-x)/2), range (0, e^-1/2]."""
    if x < -700.0:
        # e^-x overflows a double here while the function value itself
        # underflows; return the limit directly.
        return 0.0
    return math.exp(-0.5 * (x + math.exp(-x)))


def moyal_inverse(y: float, side: str = "plus") -> float:
    """Solve moyal(x) = y for x.

    The Moyal function rises to its single maximum e^-1/2 at x = 0 and
    decays on both sides, so each value in (0, e^-1/2) is attained
    twice.  ``side="plus"`` returns the root right of the maximum
    (principal branch, x > 0), ``side="minus"`` the root left of it
    (lower branch, x < 0).

    Raises
    ------
    DomainError
        If y is not in (0, e^-1/2].
    """
    if side not in MOYAL_SIDES:
        raise ValueError(f"side must be one of {MOYAL_SIDES}, got {side!r}")
    if not y > 0.0:
        raise DomainError(f"moyal values are positive; y={y!r} is outside (0, {MOYAL_PEAK!r}]")
    if y > MOYAL_PEAK + _MOYAL_PEAK_TOL:
        raise DomainError(
            f"y={y!r} exceeds the Moyal maximum e^-1/2 = {MOYAL_PEAK!r}"
        )
    # Values within rounding of the peak correspond to the branch point;
    # snap them so the W argument does not land below -1/e.
    y = min(y, MOYAL_PEAK)
    w = lambert_w0(-y * y) if side == "plus" else lambert_wm1(-y * y)
    return w - 2.0 * math.log(y)


@dataclass(frozen=True)
class GaisserHillasParams:
    """Three-parameter Gaisser-Hillas profile shape.

    ``X0`` is the nominal starting depth, ``Xmax`` the depth of the
    shower maximum, and ``lam`` the attenuation length (same units,
    positive).
    """

    X0: float
    Xmax: float
    lam: float

    def __post_init__(self) -> None:
        if not self.lam > 0.0:
            raise DomainError(f"lam must be > 0, got {self.lam!r}")
        if not self.Xmax > self.X0:
            raise DomainError(f"Xmax must exceed X0, got Xmax={self.Xmax!r}, X0={self.X0!r}")


def gh_rescale(X: float, p: GaisserHillasParams) -> tuple[float, float]:
    """Map a depth to the dimensionless profile coordinates (x, x_max)."""
    return (X - p.X0) / p.lam, (p.Xmax - p.X0) / p.lam


def gaisser_hillas(x: float, x_max: float) -> float:
    """One-parameter Gaisser-Hillas profile (x/x_max)^x_max * e^(x_max - x).

    Normalized to peak value 1 at x = x_max.
    """
    if not x_max > 0.0:
        raise DomainError(f"x_max must be > 0, got {x_max!r}")
    if x < 0.0:
        raise DomainError(f"profile depth must be >= 0, got x={x!r}")
    if x == 0.0:
        return 0.0
    return (x / x_max) ** x_max * math.exp(x_max - x)


class GhRoots(NamedTuple):
    """The two depths at which a Gaisser-Hillas profile attains a value."""

    left: float
    right: float


def gh_inverse(y: float, x_max: float) -> GhRoots:
    """Solve gaisser_hillas(x, x_max) = y for both roots.

    Returns ``(left, right)`` with left <= x_max <= right; the bounds
    are strict except at the peak value y = 1, where both roots
    coincide with x_max.

    Raises
    ------
    DomainError
        If y is not in (0, 1] or x_max is not positive.
    """
    if not x_max > 0.0:
        raise DomainError(f"x_max must be > 0, got {x_max!r}")
    if not 0.0 < y <= 1.0:
        raise DomainError(f"profile values lie in (0, 1]; got y={y!r}")
    # (x/x_max) e^(1 - x/x_max) = y^(1/x_max) rearranges to
    # (-x/x_max) e^(-x/x_max) = -y^(1/x_max)/e, a Lambert W equation.
    # Writing the right side with exp(-1) keeps y = 1 exactly on the
    # branch point, so both roots collapse to x_max with no rounding.
    arg = -(y ** (1.0 / x_max)) * math.exp(-1.0)
    return GhRoots(-x_max * lambert_w0(arg), -x_max * lambert_wm1(arg))


def gh_profile(X: float, p: GaisserHillasParams) -> float:
    """Three-parameter Gaisser-Hillas profile value at depth X."""
    x, x_max = gh_rescale(X, p)
    if x < 0.0:
        raise DomainError(f"depth X={X!r} is before the profile start X0={p.X0!r}")
    return gaisser_hillas(x, x_max)


def gh_profile_inverse(y: float, p: GaisserHillasParams) -> GhRoots:
    """Both depths at which the three-parameter profile attains value y."""
    x_max = (p.Xmax - p.X0) / p.lam
    roots = gh_inverse(y, x_max)
    return GhRoots(p.X0 + p.lam * roots.left, p.X0 + p.lam * roots.right)
