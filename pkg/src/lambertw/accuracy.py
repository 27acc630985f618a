"""Decimal-places accuracy metric and grid sweeps against the reference solver.

The central quantity is

    delta(x) = log10|w_exact| - log10|w_approx - w_exact|,

the number of correct decimal places of an approximation relative to the
reference value.  ``accuracy_sweep`` evaluates a chosen pipeline stage
(raw approximation, a single Halley or Fritsch step, or the fully
refined value) over a sampling grid and reports the per-point deltas,
optionally writing a plain-text data file suitable for plotting.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

import numpy as np

from .api import lambert_w, lambert_w_approximation, dispatch_region
from .branches import Branch
from .iteration import SINGULARITY_GUARD, fritsch_step, halley_step
from .oracle import MINUS_INV_E, reference_w

# Value reported when approximation and reference agree bit-for-bit.  A
# double carries just under 16 significant decimal digits, so 17 sits
# above every resolvable delta and reads as "machine accurate".
DELTA_CAP = 17.0

# Pipeline stages that a sweep can measure.
STAGES = ("approximation", "one-halley", "one-fritsch", "converged")


def delta_accuracy(approx: float, exact: float) -> float:
    """Number of correct decimal places of ``approx`` relative to ``exact``.

    Returns ``log10|exact| - log10|approx - exact|``, or :data:`DELTA_CAP`
    when the two values are identical in working precision.

    Raises
    ------
    ValueError
        If ``exact`` is zero; the metric divides by the true value's
        magnitude and is undefined there.
    """
    if exact == 0.0:
        raise ValueError("delta accuracy is undefined when the exact value is 0")
    if approx == exact:
        return DELTA_CAP
    return math.log10(abs(exact)) - math.log10(abs(approx - exact))


@dataclass(frozen=True)
class GridSpec:
    """Sampling grid: ``kind`` is ``"linear"`` or ``"log"``.

    Log grids require ``start`` and ``stop`` of the same nonzero sign;
    negative log grids (used to approach 0 from below on the lower
    branch) are spaced geometrically in ``|x|``.
    """

    kind: str
    start: float
    stop: float
    count: int

    def __post_init__(self) -> None:
        if self.kind not in ("linear", "log"):
            raise ValueError(f"grid kind must be 'linear' or 'log', got {self.kind!r}")
        if self.count < 2:
            raise ValueError(f"grid needs at least 2 points, got {self.count}")
        if self.kind == "log" and self.start * self.stop <= 0.0:
            raise ValueError("log grid endpoints must share a nonzero sign")

    def points(self) -> np.ndarray:
        if self.kind == "linear":
            return np.linspace(self.start, self.stop, self.count)
        return np.geomspace(self.start, self.stop, self.count)

    def describe(self) -> str:
        return f"{self.kind}[{self.start:.17g}, {self.stop:.17g}, {self.count}]"


@dataclass(frozen=True)
class AccuracyReport:
    """Per-point deltas for one branch/stage/grid combination."""

    branch: Branch
    stage: str
    grid: GridSpec
    samples: tuple[tuple[float, float, str], ...]  # (x, delta, region kind)

    @property
    def min_delta(self) -> float:
        return min(delta for _, delta, _ in self.samples)

    @property
    def grid_spec(self) -> str:
        return self.grid.describe()


def default_panels(branch: int) -> tuple[GridSpec, ...]:
    """Canonical sweep grids for a branch, mirroring the accuracy plots.

    Branch 0 pairs a linear panel across the definition-range start with
    a log panel out to 1e5; branch -1 pairs a linear panel with a log
    panel approaching 0 from below.  Both start 1e-9 right of -1/e: at
    the branch point itself the delta is limited by representability of
    x, not by any algorithm.
    """
    b = Branch(branch)
    if b is Branch.PRINCIPAL:
        return (
            GridSpec("linear", MINUS_INV_E + 1e-9, 0.3, 1000),
            GridSpec("log", 0.3, 1e5, 1000),
        )
    return (
        GridSpec("linear", MINUS_INV_E + 1e-9, -1e-6, 1000),
        GridSpec("log", -1e-6, -1e-12, 1000),
    )


def _stage_value(branch: Branch, stage: str, x: float) -> float:
    """Evaluate one pipeline stage at ``x``."""
    if stage == "converged":
        return lambert_w(branch, x).value
    w = lambert_w_approximation(branch, x)
    if stage == "approximation":
        return w
    # So close to the branch point that a step would divide by ~0; the
    # seed is already machine-accurate there.
    if abs(1.0 + w) <= SINGULARITY_GUARD:
        return w
    if stage == "one-halley":
        return halley_step(x, w)
    return fritsch_step(x, w)


def accuracy_sweep(branch: int, stage: str, grid: GridSpec, output=None) -> AccuracyReport:
    """Measure ``stage`` against the reference solver over ``grid``.

    Parameters
    ----------
    branch : int
        0 or -1.
    stage : str
        One of :data:`STAGES`.
    grid : GridSpec
        Sampling grid; must lie inside the branch domain and exclude 0.
    output : path or writable file, optional
        When given, the report is also written in the plain-text data
        format (one ``x delta region`` record per line).

    Returns
    -------
    AccuracyReport
    """
    b = Branch(branch)
    if stage not in STAGES:
        raise ValueError(f"stage must be one of {STAGES}, got {stage!r}")
    samples = []
    for x in grid.points():
        x = float(x)
        if x == 0.0:
            raise ValueError("accuracy grids must exclude x = 0 (delta undefined)")
        try:
            exact = reference_w(b, x)
            value = _stage_value(b, stage, x)
            delta = delta_accuracy(value, exact)
        except (ValueError, ArithmeticError) as exc:
            raise type(exc)(f"at x={x!r}: {exc}") from exc
        samples.append((x, delta, dispatch_region(b, x).kind))
    report = AccuracyReport(b, stage, grid, tuple(samples))
    if output is not None:
        write_report(report, output)
    return report


def write_report(report: AccuracyReport, destination) -> None:
    """Write a report as plain text: a ``#`` header, then x/delta/region rows.

    ``destination`` may be a filesystem path or an open text file.
    Values are printed with full (round-trippable) precision.
    """
    if hasattr(destination, "write"):
        _write_report_file(report, destination)
    else:
        with open(os.fspath(destination), "w", encoding="ascii") as handle:
            _write_report_file(report, handle)


def _write_report_file(report: AccuracyReport, handle) -> None:
    handle.write(
        f"# branch={int(report.branch)} stage={report.stage} grid={report.grid_spec}\n"
    )
    for x, delta, region in report.samples:
        handle.write(f"{x!r} {delta!r} {region}\n")
