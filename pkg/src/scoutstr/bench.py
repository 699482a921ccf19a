"""Timed and counted benchmark runs over (algorithm x testbed) grids.

Counted mode runs each cell once — the counters are deterministic, so the
mean equals any single run.  Timed mode uses the uninstrumented kernels:
warmup, then a single monotonic-clock window around the iteration loop,
reporting the mean per invocation.  Every measured invocation's result is
asserted against the case's expected index; a benchmark must never time a
wrong answer.
"""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .algorithms import ALGORITHMS, AlgorithmId, supports
from .kernels import DEFAULT_ENGINE, get_kernel
from .testbeds import TestCase

DEFAULT_ITERATIONS = 10_000
DEFAULT_WARMUP = 1_000

CSV_HEADER = "algorithm,case,depth_percent,metric,value,iterations"


class BenchError(RuntimeError):
    """A measured invocation produced a wrong answer, or the grid is invalid."""


@dataclass(frozen=True)
class BenchConfig:
    algorithms: tuple[AlgorithmId, ...]
    testbed: str  # one of {depth, length, corpus}
    iterations: int = DEFAULT_ITERATIONS
    warmup_iterations: int = DEFAULT_WARMUP
    mode: str = "counted"  # one of {timed, counted}
    engine: Optional[str] = None  # timed mode kernel engine; None = best

    def __post_init__(self) -> None:
        if self.iterations < 1:
            raise BenchError("iterations must be >= 1")
        if self.warmup_iterations < 0:
            raise BenchError("warmup_iterations must be >= 0")
        if self.mode not in ("timed", "counted"):
            raise BenchError(f"unknown mode {self.mode!r}")
        if self.testbed not in ("depth", "length", "corpus"):
            raise BenchError(f"unknown testbed {self.testbed!r}")


@dataclass(frozen=True)
class BenchRecord:
    algorithm: AlgorithmId
    case_label: str
    depth_percent: Optional[float]
    iterations: int
    mean_time_ns: Optional[float] = None  # timed mode only
    comparisons: Optional[int] = None  # counted mode only
    memory_lookups: Optional[int] = None
    heavy_arith: Optional[int] = None

    def metrics(self) -> list[tuple[str, float]]:
        if self.mean_time_ns is not None:
            return [("mean_time_ns", self.mean_time_ns)]
        return [
            ("comparisons", self.comparisons),
            ("memory_lookups", self.memory_lookups),
            ("heavy_arith", self.heavy_arith),
        ]


@dataclass
class SkippedCell:
    algorithm: AlgorithmId
    case_label: str
    reason: str


@dataclass
class BenchRun:
    records: list[BenchRecord] = field(default_factory=list)
    skipped: list[SkippedCell] = field(default_factory=list)
    checksum: int = 0  # dead-code guard: sum of all measured indices


def _counted_cell(algorithm: AlgorithmId, case: TestCase, iterations: int) -> BenchRecord:
    result = ALGORITHMS[algorithm].search(case.target, case.pattern)
    if result.index != case.expected_index:
        raise BenchError(
            f"{algorithm.value} on {case.label}: got {result.index}, "
            f"expected {case.expected_index}"
        )
    m = result.metrics
    return BenchRecord(
        algorithm, case.label, case.depth_percent, iterations,
        comparisons=m.comparisons, memory_lookups=m.memory_lookups,
        heavy_arith=m.heavy_arith,
    )


def _timed_cell(
    algorithm: AlgorithmId,
    case: TestCase,
    iterations: int,
    warmup: int,
    engine: Optional[str],
    run: BenchRun,
) -> BenchRecord:
    kernel = get_kernel(ALGORITHMS[algorithm].kernel_name, engine)
    t, p = case.target.points, case.pattern.points
    expected = case.expected_index if case.expected_index is not None else -1
    for _ in range(warmup):
        if kernel(t, p) != expected:
            raise BenchError(f"{algorithm.value} on {case.label}: wrong warmup result")
    acc = 0
    start = time.perf_counter_ns()
    for _ in range(iterations):
        acc += kernel(t, p)
    elapsed = time.perf_counter_ns() - start
    if acc != expected * iterations:
        raise BenchError(f"{algorithm.value} on {case.label}: wrong timed result")
    run.checksum += acc
    return BenchRecord(
        algorithm, case.label, case.depth_percent, iterations,
        mean_time_ns=elapsed / iterations,
    )


def run_bench(config: BenchConfig, cases: Sequence[TestCase]) -> BenchRun:
    """One record per compatible (algorithm, case) cell, in grid order."""
    run = BenchRun()
    for case in cases:
        for algorithm in config.algorithms:
            if not supports(algorithm, case.target, case.pattern):
                run.skipped.append(
                    SkippedCell(algorithm, case.label, "unsupported character set")
                )
                continue
            if config.mode == "counted":
                record = _counted_cell(algorithm, case, config.iterations)
            else:
                record = _timed_cell(
                    algorithm, case, config.iterations,
                    config.warmup_iterations, config.engine, run,
                )
            run.records.append(record)
    return run


def emit_report(records: Sequence[BenchRecord], format: str = "csv") -> str:
    """Render records as CSV (one row per record-metric) or JSON."""
    if format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_HEADER.split(","))
        for r in records:
            depth = "" if r.depth_percent is None else f"{r.depth_percent:g}"
            for metric, value in r.metrics():
                writer.writerow(
                    [r.algorithm.value, r.case_label, depth, metric, value, r.iterations]
                )
        return buf.getvalue()
    if format == "json":
        doc = [
            {
                "algorithm": r.algorithm.value,
                "case": r.case_label,
                "depth_percent": r.depth_percent,
                "iterations": r.iterations,
                **{metric: value for metric, value in r.metrics()},
            }
            for r in records
        ]
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"
    raise ValueError(f"unknown format {format!r}")


def summary_table(run: BenchRun, engine: Optional[str] = None) -> str:
    """Human-readable fixed-width summary of a benchmark run."""
    lines = []
    engine_name = engine or DEFAULT_ENGINE
    lines.append(f"engine: {engine_name}" if any(
        r.mean_time_ns is not None for r in run.records
    ) else "mode: counted")
    header = f"{'algorithm':<14}{'case':<16}{'metric':<16}{'value':>14}"
    lines.append(header)
    lines.append("-" * len(header))
    for r in run.records:
        for metric, value in r.metrics():
            shown = f"{value:.1f}" if isinstance(value, float) else str(value)
            lines.append(f"{r.algorithm.value:<14}{r.case_label:<16}{metric:<16}{shown:>14}")
    for s in run.skipped:
        lines.append(f"skipped {s.algorithm.value} on {s.case_label}: {s.reason}")
    return "\n".join(lines) + "\n"
