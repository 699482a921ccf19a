"""Acceptance suite: one test per criterion, one printed pass/fail line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines; each test also asserts, so a failing criterion fails the suite.
"""

import statistics
import time

import pytest

from scoutstr import ALGORITHMS, AlgorithmId, dispatch, from_string
from scoutstr.kernels import get_kernel
from scoutstr.testbeds import gen_depth_testbed, gen_length_testbed, load_corpus
from scoutstr.verify import (
    fuzz_cases,
    run_verification,
    slide_soundness_check,
)

WALK_TARGET = "aaacbabaaaabcbaabcaabacab"
WALK_PATTERN = "aaba"


def report(number: int, description: str, passed: bool) -> None:
    status = "PASS" if passed else "FAIL"
    print(f"criterion {number}: {description}: {status}")
    assert passed, f"criterion {number} failed: {description}"


@pytest.fixture(scope="module")
def corpus():
    return load_corpus()


@pytest.fixture(scope="module")
def corpus_counters(corpus):
    grid = {}
    for case in corpus:
        for algorithm in AlgorithmId:
            grid[(algorithm, case.depth_percent)] = dispatch(
                algorithm, case.target, case.pattern
            )
    return grid


def test_criterion_1_differential_verification():
    started = time.monotonic()
    verification = run_verification(
        seed=42, fuzz_count=10_000, exhaustive=True, slide_count=0
    )
    elapsed = time.monotonic() - started
    disagreements = sum(len(r.disagreements) for r in verification.differential)
    report(
        1,
        "all 13 algorithms agree with the oracle over 10,000 seed-42 fuzz "
        f"cases plus the exhaustive sweep in {elapsed:.1f}s "
        f"({disagreements} disagreements)",
        disagreements == 0 and elapsed < 60.0,
    )


def test_criterion_2_slide_soundness():
    failures = 0
    for target, pattern in fuzz_cases(43, 1_000):
        if not slide_soundness_check(target, pattern).passed:
            failures += 1
    walkthrough = slide_soundness_check(
        from_string(WALK_TARGET), from_string(WALK_PATTERN)
    )
    twin_taken = any(e.kind == "twin" for e in walkthrough.events)
    report(
        2,
        "every Scout slide over 1,000 seeded cases is individually sound and "
        f"the walkthrough case returns 18 with a twin slide "
        f"({failures} failures, index={walkthrough.index})",
        failures == 0 and walkthrough.passed and walkthrough.index == 18
        and twin_taken,
    )


def test_criterion_3_exact_shallow_corpus_counters(corpus_counters):
    expectations = {
        AlgorithmId.BRUTE_FORCE: (41, 82),
        AlgorithmId.SCOUT: (41, 82),
        AlgorithmId.ROLLING_SUM: (41, 164),
        AlgorithmId.ROLLING_XOR: (41, 164),
        AlgorithmId.KARP_RABIN: (41, 164),
    }
    mismatches = []
    for algorithm, (comps, lookups) in expectations.items():
        m = corpus_counters[(algorithm, 0.0)].metrics
        if (m.comparisons, m.memory_lookups) != (comps, lookups):
            mismatches.append(
                f"{algorithm.value}={m.comparisons}/{m.memory_lookups}"
            )
    report(
        3,
        "exact counters on the shallowest corpus case: brute 41/82, "
        "scout 41/82, rolling trio 41/164"
        + (f" (off: {', '.join(mismatches)})" if mismatches else ""),
        not mismatches,
    )


def test_criterion_4_banded_shallow_corpus_counters(corpus_counters):
    sunday = corpus_counters[(AlgorithmId.SUNDAY_QUICK, 0.0)].metrics
    kmp = corpus_counters[(AlgorithmId.KMP, 0.0)].metrics
    twin = corpus_counters[(AlgorithmId.SCOUT_TWIN, 0.0)].metrics
    checks = (
        abs(sunday.memory_lookups - 419) <= 419 * 0.02,
        abs(kmp.comparisons - 121) <= 121 * 0.15,
        abs(twin.comparisons - 462) <= 462 * 0.10,
    )
    report(
        4,
        "banded counters on the shallowest corpus case: Sunday lookups "
        f"{sunday.memory_lookups} in 419±2%, KMP comparisons "
        f"{kmp.comparisons} in 121±15%, Scout Twin comparisons "
        f"{twin.comparisons} in 462±10%",
        all(checks),
    )


def test_criterion_5_corpus_grid_laws(corpus, corpus_counters):
    brute_law = all(
        corpus_counters[(AlgorithmId.BRUTE_FORCE, c.depth_percent)].metrics.memory_lookups
        == 2 * corpus_counters[(AlgorithmId.BRUTE_FORCE, c.depth_percent)].metrics.comparisons
        for c in corpus
    )
    scout_band = all(
        (m := corpus_counters[(AlgorithmId.SCOUT, c.depth_percent)].metrics).comparisons
        <= m.memory_lookups <= 2 * m.comparisons
        for c in corpus
    )
    deepest = max(c.depth_percent for c in corpus)
    scout_deep = corpus_counters[(AlgorithmId.SCOUT, deepest)].metrics.memory_lookups
    brute_deep = corpus_counters[(AlgorithmId.BRUTE_FORCE, deepest)].metrics.memory_lookups
    ratio = scout_deep / brute_deep
    report(
        5,
        "corpus grid laws: brute lookups are twice comparisons on every row, "
        "scout lookups sit in [comps, 2*comps] on every row, and the deepest "
        f"scout/brute lookup ratio {ratio:.4f} is at most 0.60",
        brute_law and scout_band and ratio <= 0.60,
    )


def test_criterion_6_depth_testbed_brute_cost():
    ok = True
    for prefix in range(101):
        case = gen_depth_testbed(prefix)
        result = dispatch(AlgorithmId.BRUTE_FORCE, case.target, case.pattern)
        if result.index != prefix or result.metrics.comparisons != prefix + 5:
            ok = False
            break
    report(
        6,
        "brute force spends exactly prefix + 5 comparisons on every depth "
        "testbed from 0 through 100",
        ok,
    )


def test_criterion_7_signature_discrimination():
    target, pattern = from_string("bbbbbbbb"), from_string("ac")
    sum_result = dispatch(AlgorithmId.ROLLING_SUM, target, pattern)
    xor_result = dispatch(AlgorithmId.ROLLING_XOR, target, pattern)
    report(
        7,
        "on target 'bbbbbbbb' with pattern 'ac' the Sum signature collides "
        f"into {sum_result.metrics.comparisons} comparisons (>= 7) while XOR "
        f"rejects every window for {xor_result.metrics.comparisons}",
        sum_result.index is None and xor_result.index is None
        and sum_result.metrics.comparisons >= 7
        and xor_result.metrics.comparisons == 0,
    )


def test_criterion_8_rolling_identity():
    import random

    rng = random.Random(8)
    mask = (1 << 64) - 1
    ok = True
    for _ in range(1_000):
        n = rng.randint(1, 200)
        m = rng.randint(1, min(16, n))
        text = [rng.randrange(0x110000) for _ in range(n)]
        i = rng.randint(0, n - m - 1) if n - m >= 1 else 0
        # Roll both signatures one step and compare against from-scratch.
        ssum = sum(text[i:i + m]) & mask
        sxor = 0
        for v in text[i:i + m]:
            sxor ^= v
        if i + m < n:
            rolled_sum = (ssum - text[i] + text[i + m]) & mask
            rolled_xor = sxor ^ text[i] ^ text[i + m]
            fresh_sum = sum(text[i + 1:i + 1 + m]) & mask
            fresh_xor = 0
            for v in text[i + 1:i + 1 + m]:
                fresh_xor ^= v
            if rolled_sum != fresh_sum or rolled_xor != fresh_xor:
                ok = False
                break
    report(
        8,
        "rolled Sum and XOR signatures equal the from-scratch signatures on "
        "1,000 random windows",
        ok,
    )


def test_criterion_9_heavy_arithmetic_attribution(corpus, corpus_counters):
    others_clean = all(
        corpus_counters[(algorithm, c.depth_percent)].metrics.heavy_arith == 0
        for c in corpus
        for algorithm in AlgorithmId
        if algorithm is not AlgorithmId.KARP_RABIN
    )
    kr_spends = all(
        corpus_counters[(AlgorithmId.KARP_RABIN, c.depth_percent)].metrics.heavy_arith > 0
        for c in corpus
    )
    report(
        9,
        "heavy arithmetic is zero for every algorithm except Karp-Rabin, "
        "which spends it on every corpus case",
        others_clean and kr_spends,
    )


def test_criterion_10_timed_advisory():
    case = gen_length_testbed(10_000)
    t, p = case.target.points, case.pattern.points
    means = {}
    for name in ("brute_force", "scout"):
        kernel = get_kernel(name)
        assert kernel(t, p) == 10_000
        samples = []
        for _ in range(5):
            start = time.perf_counter_ns()
            for _ in range(200):
                kernel(t, p)
            samples.append((time.perf_counter_ns() - start) / 200)
        means[name] = statistics.mean(samples)
    faster = means["scout"] < means["brute_force"]
    line = (
        f"criterion 10 (advisory): scout mean {means['scout']:.0f}ns vs brute "
        f"mean {means['brute_force']:.0f}ns at prefix 10,000: "
        f"{'PASS' if faster else 'FAIL (advisory only, not asserted)'}"
    )
    print(line)
    # Advisory: wall-clock ordering is environment-dependent, so this
    # criterion reports but never fails the suite.
