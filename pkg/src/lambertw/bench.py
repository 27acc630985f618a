"""Micro-benchmark comparing the Halley and Fritsch refinement backends.

Timing a few-microsecond function call honestly requires two tricks,
both applied here:

* every call gets a slightly different input (a shrink of at most one
  part in 10^9 toward zero, staying inside the branch domain) and every
  result lands in a running checksum, so the work cannot be hoisted or
  elided;
* an identical loop with the function replaced by the identity is timed
  as an overhead baseline and subtracted, so the reported figure is the
  net cost per call.

Wall-clock numbers vary by machine; the durable observable is the step
count: how many refinement steps each scheme needs to reach the
1e-14-scale residual from the dispatch approximation.
"""

from __future__ import annotations

import gc
import os
import statistics
import time
from dataclasses import dataclass

from .accuracy import GridSpec
from .api import RESIDUAL_TOL, dispatch_region, lambert_w_approximation
from .branches import Branch
from .iteration import (
    SCHEMES,
    SINGULARITY_GUARD,
    defining_residual,
    fritsch_step,
    halley_step,
)

_STEP = {"halley": halley_step, "fritsch": fritsch_step}
_MAX_STEPS = 8

# Relative shrink applied across one timing loop; small enough never to
# cross a domain boundary, large enough to defeat result caching.
_PERTURBATION = 1e-9


def _refined(branch: Branch, x: float, scheme: str) -> float:
    """Full evaluation pipeline with a selectable refinement scheme."""
    w = lambert_w_approximation(branch, x)
    # w = 0 (x = 0) is exact, and at the branch-point clamp a step would
    # divide by ~0; both are returned unrefined, as in lambert_w.
    if w == 0.0 or abs(1.0 + w) <= SINGULARITY_GUARD:
        return w
    limit = RESIDUAL_TOL * max(abs(x), 1.0)
    step = _STEP[scheme]
    for _ in range(_MAX_STEPS):
        w = step(x, w)
        if defining_residual(x, w) <= limit:
            break
    return w


def steps_to_converge(branch: int, x: float, scheme: str) -> int:
    """Refinement steps needed to reach the residual tolerance at x.

    Counts the steps the evaluation pipeline actually takes: at least
    one (the residual is only checked after a step), zero only at the
    branch-point clamp where stepping is skipped entirely.
    """
    b = Branch(branch)
    w = lambert_w_approximation(b, x)
    if w == 0.0 or abs(1.0 + w) <= SINGULARITY_GUARD:
        return 0
    limit = RESIDUAL_TOL * max(abs(x), 1.0)
    step = _STEP[scheme]
    for steps in range(1, _MAX_STEPS + 1):
        w = step(x, w)
        if defining_residual(x, w) <= limit:
            return steps
    return _MAX_STEPS


def checksum_pass(branch: int, grid: GridSpec, scheme: str, calls_per_point: int) -> float:
    """Sum of results over exactly the inputs a timed run would evaluate.

    Used to confirm that timing instrumentation does not change results:
    this untimed sum must equal the benchmark's checksum bit-for-bit.
    """
    b = Branch(branch)
    total = 0.0
    shrink = _PERTURBATION / calls_per_point
    # Accumulate a per-point subtotal first, exactly as the timed run
    # does; float addition is not associative, and the checksums must
    # match bit-for-bit.
    for x in grid.points():
        x = float(x)
        subtotal = 0.0
        for i in range(calls_per_point):
            subtotal += _refined(b, x * (1.0 - i * shrink), scheme)
        total += subtotal
    return total


@dataclass(frozen=True)
class BenchRecord:
    """Net timing and step count for one grid point and scheme."""

    x: float
    scheme: str
    region: str
    net_ns: float       # net time per call (overhead subtracted), ns
    spread_ns: float    # (max - min)/2 of per-call time across repetitions
    steps: int


@dataclass(frozen=True)
class RegionStats:
    """Aggregate over all grid points of one region/scheme pair."""

    calls: int
    total_ns: float
    overhead_ns: float
    net_ns_per_call: float


@dataclass(frozen=True)
class BenchReport:
    branch: Branch
    grid: GridSpec
    calls_per_point: int
    repetitions: int
    overhead_ns_per_call: float
    records: tuple[BenchRecord, ...]
    checksums: dict[str, float]

    def total_steps(self, scheme: str) -> int:
        return sum(r.steps for r in self.records if r.scheme == scheme)

    def region_summary(self) -> dict[tuple[str, str], RegionStats]:
        """Per-(region, scheme) aggregates with overhead subtraction."""
        buckets: dict[tuple[str, str], list[BenchRecord]] = {}
        for record in self.records:
            buckets.setdefault((record.region, record.scheme), []).append(record)
        summary = {}
        for key, records in buckets.items():
            calls = self.calls_per_point * len(records)
            overhead = self.overhead_ns_per_call * calls
            total = sum(r.net_ns for r in records) * self.calls_per_point + overhead
            net = max(0.0, (total - overhead) / calls)
            summary[key] = RegionStats(calls, total, overhead, net)
        return summary


def _time_loop(func, x: float, calls: int) -> tuple[int, float]:
    """Time ``calls`` invocations with per-call perturbation; also checksum."""
    shrink = _PERTURBATION / calls
    total = 0.0
    start = time.perf_counter_ns()
    for i in range(calls):
        total += func(x * (1.0 - i * shrink))
    elapsed = time.perf_counter_ns() - start
    return elapsed, total


def run_benchmark(
    branch: int,
    grid: GridSpec,
    schemes: tuple[str, ...] = SCHEMES,
    calls_per_point: int = 10_000,
    repetitions: int = 5,
) -> BenchReport:
    """Benchmark the chosen schemes over a grid.

    Each (point, scheme) pair is timed ``repetitions`` times and the
    median per-call time is kept; an identity-function loop of identical
    shape provides the overhead baseline that is subtracted.  Results
    accumulate into per-scheme checksums so the calls cannot be
    optimized away and runs can be checked for determinism.
    """
    b = Branch(branch)
    if calls_per_point < 10_000:
        raise ValueError(f"calls_per_point must be >= 10000, got {calls_per_point}")
    if repetitions < 1:
        raise ValueError(f"repetitions must be >= 1, got {repetitions}")
    for scheme in schemes:
        if scheme not in SCHEMES:
            raise ValueError(f"unknown scheme {scheme!r}; expected subset of {SCHEMES}")

    xs = [float(x) for x in grid.points()]
    gc_was_enabled = gc.isenabled()
    gc.disable()
    try:
        identity = lambda value: value  # noqa: E731 - loop shape must match exactly
        overhead_times = [
            _time_loop(identity, xs[0], calls_per_point)[0] for _ in range(repetitions)
        ]
        overhead_per_call = statistics.median(overhead_times) / calls_per_point

        records = []
        checksums: dict[str, float] = {}
        for x in xs:
            region = dispatch_region(b, x).kind
            for scheme in schemes:
                func = lambda value, s=scheme: _refined(b, value, s)  # noqa: E731
                elapsed = []
                checksum = 0.0
                for _ in range(repetitions):
                    ns, checksum = _time_loop(func, x, calls_per_point)
                    elapsed.append(ns)
                per_call = [ns / calls_per_point for ns in elapsed]
                net = max(0.0, statistics.median(per_call) - overhead_per_call)
                spread = (max(per_call) - min(per_call)) / 2.0
                records.append(
                    BenchRecord(x, scheme, region, net, spread,
                                steps_to_converge(b, x, scheme))
                )
                checksums[scheme] = checksums.get(scheme, 0.0) + checksum
    finally:
        if gc_was_enabled:
            gc.enable()

    return BenchReport(
        branch=b,
        grid=grid,
        calls_per_point=calls_per_point,
        repetitions=repetitions,
        overhead_ns_per_call=overhead_per_call,
        records=tuple(records),
        checksums=checksums,
    )


def format_table(report: BenchReport) -> str:
    """Human-readable per-region summary table."""
    lines = [
        f"branch {int(report.branch):+d}, grid {report.grid.describe()}, "
        f"{report.calls_per_point} calls/point, {report.repetitions} repetitions, "
        f"overhead {report.overhead_ns_per_call:.1f} ns/call",
        f"{'region':<22} {'scheme':<8} {'calls':>9} {'net ns/call':>12} {'steps':>6}",
    ]
    summary = report.region_summary()
    steps = {}
    for record in report.records:
        steps.setdefault((record.region, record.scheme), []).append(record.steps)
    for (region, scheme), stats in sorted(summary.items()):
        mean_steps = statistics.fmean(steps[(region, scheme)])
        lines.append(
            f"{region:<22} {scheme:<8} {stats.calls:>9} "
            f"{stats.net_ns_per_call:>12.1f} {mean_steps:>6.2f}"
        )
    for scheme in sorted(report.checksums):
        lines.append(f"checksum[{scheme}] = {report.checksums[scheme]!r}")
    return "\n".join(lines)


def write_records(report: BenchReport, destination) -> None:
    """Write per-point records as ``x scheme net_ns steps`` lines."""
    if hasattr(destination, "write"):
        _write_records_file(report, destination)
    else:
        with open(os.fspath(destination), "w", encoding="ascii") as handle:
            _write_records_file(report, handle)


def _write_records_file(report: BenchReport, handle) -> None:
    handle.write(
        f"# branch={int(report.branch)} grid={report.grid.describe()} "
        f"calls_per_point={report.calls_per_point} repetitions={report.repetitions}\n"
    )
    for record in report.records:
        handle.write(f"{record.x!r} {record.scheme} {record.net_ns!r} {record.steps}\n")
