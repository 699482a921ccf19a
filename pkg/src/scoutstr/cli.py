"""Command-line front end: search, verify, bench, and testbed commands.

Exit statuses are stable: 0 success/found, 1 verification-failure or
pattern-not-found, 2 usage or environment error.  The default benchmark
iteration count can be overridden with the SCOUTSTR_ITERATIONS environment
variable.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Optional, Sequence

from . import bench as bench_mod
from . import testbeds, verify as verify_mod
from .algorithms import ALGORITHMS, AlgorithmId, parse_algorithm
from .kernels import DEFAULT_ENGINE, available_engines
from .text import UnsupportedCharsetError, from_string

ITERATIONS_ENV = "SCOUTSTR_ITERATIONS"
EXIT_OK = 0
EXIT_FAIL = 1
EXIT_ERROR = 2

_ALGORITHM_TOKENS = ", ".join(a.value for a in AlgorithmId)


def _default_iterations() -> int:
    raw = os.environ.get(ITERATIONS_ENV)
    if raw is None:
        return bench_mod.DEFAULT_ITERATIONS
    try:
        value = int(raw)
        if value < 1:
            raise ValueError
        return value
    except ValueError:
        raise SystemExit(f"{ITERATIONS_ENV} must be a positive integer, got {raw!r}")


def _read_target(args: argparse.Namespace) -> str:
    if args.text is not None:
        return args.text
    try:
        content = open(args.file, encoding="utf-8").read()
    except OSError as exc:
        raise UsageError(f"cannot read target file: {exc}")
    if args.strip_newlines:
        content = (
            content.replace("\r\n", " ").replace("\n", " ").replace("\r", " ").strip()
        )
    return content


class UsageError(Exception):
    pass


def _parse_algorithms(tokens: str) -> list[AlgorithmId]:
    if tokens.strip().lower() == "all":
        return list(ALGORITHMS)
    try:
        return [parse_algorithm(t) for t in tokens.split(",") if t.strip()]
    except ValueError as exc:
        raise UsageError(str(exc))


def cmd_search(args: argparse.Namespace) -> int:
    algorithm = parse_algorithm(args.algorithm)
    target = from_string(_read_target(args))
    pattern = from_string(args.pattern)
    result = ALGORITHMS[algorithm].search(target, pattern)
    if result.found:
        print(result.index)
    else:
        print("not found")
    if args.metrics:
        m = result.metrics
        print(f"comparisons={m.comparisons}")
        print(f"memory_lookups={m.memory_lookups}")
        print(f"heavy_arith={m.heavy_arith}")
    return EXIT_OK if result.found else EXIT_FAIL


def cmd_verify(args: argparse.Namespace) -> int:
    algorithms = _parse_algorithms("all" if args.all else args.algorithms)
    report = verify_mod.run_verification(
        algorithms, seed=args.seed, fuzz_count=args.cases, exhaustive=args.exhaustive
    )
    for diff in report.differential:
        status = "ok" if diff.ok else f"{len(diff.disagreements)} DISAGREEMENTS"
        print(
            f"{diff.algorithm}: {diff.cases_checked} checked, "
            f"{diff.cases_skipped} skipped, {status}"
        )
        for d in diff.disagreements[:5]:
            print(
                f"  [{d.route}] target={d.target!r} pattern={d.pattern!r} "
                f"expected={d.expected} got={d.got}"
            )
    if report.slide_checked:
        verdict = "all pass" if not report.slide_failures else "FAILED"
        print(f"slide soundness: {report.slide_checked} cases, {verdict}")
        for failure in report.slide_failures[:5]:
            print(f"  {failure}")
    if args.json:
        with open(args.json, "w", encoding="utf-8") as f:
            f.write(report.to_json() + "\n")
    return EXIT_OK if report.ok else EXIT_FAIL


def _bench_cases(testbed: str) -> list[testbeds.TestCase]:
    if testbed == "depth":
        return testbeds.depth_grid()
    if testbed == "length":
        return testbeds.length_grid()
    return testbeds.load_corpus()


def cmd_bench(args: argparse.Namespace) -> int:
    algorithms = tuple(_parse_algorithms(args.algorithms))
    if not algorithms:
        raise UsageError("no algorithms selected")
    config = bench_mod.BenchConfig(
        algorithms=algorithms,
        testbed=args.testbed,
        iterations=args.iterations,
        warmup_iterations=args.warmup,
        mode=args.mode,
        engine=args.engine,
    )
    run = bench_mod.run_bench(config, _bench_cases(args.testbed))
    document = bench_mod.emit_report(run.records, args.format)
    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8") as f:
                f.write(document)
        except OSError as exc:
            raise UsageError(f"cannot write report: {exc}")
    else:
        sys.stdout.write(document)
    print(bench_mod.summary_table(run, config.engine), file=sys.stderr, end="")
    return EXIT_OK


def cmd_testbed(args: argparse.Namespace) -> int:
    if args.kind == "depth":
        cases = [testbeds.gen_depth_testbed(args.depth)]
    elif args.kind == "length":
        cases = [testbeds.gen_length_testbed(args.prefix_len)]
    else:
        cases = testbeds.load_corpus()
    for case in cases:
        depth = "" if case.depth_percent is None else f" depth={case.depth_percent:g}%"
        print(f"{case.label}: n={len(case.target)} m={len(case.pattern)} "
              f"index={case.expected_index}{depth}")
        if args.show:
            print(f"  target={case.target.as_str()!r}")
            print(f"  pattern={case.pattern.as_str()!r}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="scoutstr",
        description=(
            "Exact substring search with instrumented counters. "
            f"Algorithms: {_ALGORITHM_TOKENS}."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_search = sub.add_parser(
        "search", help="search for a pattern with one algorithm",
        description=f"Algorithms: {_ALGORITHM_TOKENS}.",
    )
    p_search.add_argument("algorithm", help=f"one of: {_ALGORITHM_TOKENS}")
    p_search.add_argument("--pattern", required=True)
    source = p_search.add_mutually_exclusive_group(required=True)
    source.add_argument("--text", help="inline target text")
    source.add_argument("--file", help="read target from a UTF-8 file")
    p_search.add_argument(
        "--strip-newlines", action="store_true",
        help="replace newlines in the file target with single spaces",
    )
    p_search.add_argument(
        "--metrics", action="store_true", help="print the three counters"
    )
    p_search.set_defaults(func=cmd_search)

    p_verify = sub.add_parser("verify", help="differential + slide-soundness checks")
    group = p_verify.add_mutually_exclusive_group(required=True)
    group.add_argument("--all", action="store_true", help="verify every algorithm")
    group.add_argument(
        "--algorithms", help=f"comma-separated subset of: {_ALGORITHM_TOKENS}"
    )
    p_verify.add_argument("--seed", type=int, default=42)
    p_verify.add_argument("--cases", type=int, default=10_000)
    p_verify.add_argument(
        "--exhaustive", action="store_true",
        help="also sweep every pair over {a,b} with n<=10, m<=4",
    )
    p_verify.add_argument("--json", help="also write a JSON report to this path")
    p_verify.set_defaults(func=cmd_verify)

    p_bench = sub.add_parser("bench", help="timed or counted benchmark grid")
    p_bench.add_argument("--testbed", choices=["depth", "length", "corpus"],
                         required=True)
    p_bench.add_argument("--mode", choices=["timed", "counted"], default="counted")
    p_bench.add_argument(
        "--algorithms", default="all",
        help=f"comma-separated list or 'all'; tokens: {_ALGORITHM_TOKENS}",
    )
    p_bench.add_argument(
        "--iterations", type=int, default=None,
        help=f"timed iterations per cell (default {bench_mod.DEFAULT_ITERATIONS}; "
             f"override with ${ITERATIONS_ENV})",
    )
    p_bench.add_argument("--warmup", type=int, default=bench_mod.DEFAULT_WARMUP)
    p_bench.add_argument(
        "--engine", choices=list(available_engines()) + ["auto"], default=None,
        help=f"timed-mode kernel engine (default: {DEFAULT_ENGINE})",
    )
    p_bench.add_argument("--output", help="report file path (default: stdout)")
    p_bench.add_argument("--format", choices=["csv", "json"], default="csv")
    p_bench.set_defaults(func=cmd_bench)

    p_testbed = sub.add_parser("testbed", help="generate and describe testbed cases")
    p_testbed.add_argument("kind", choices=["depth", "length", "corpus"])
    p_testbed.add_argument("--depth", type=float, default=50.0)
    p_testbed.add_argument("--prefix-len", type=int, default=100)
    p_testbed.add_argument("--show", action="store_true",
                           help="print the target and pattern text")
    p_testbed.set_defaults(func=cmd_testbed)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "iterations", "missing") is None:
        args.iterations = _default_iterations()
    try:
        return args.func(args)
    except (UsageError, ValueError, testbeds.TestbedError,
            bench_mod.BenchError, UnsupportedCharsetError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
