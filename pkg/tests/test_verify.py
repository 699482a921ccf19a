"""Tests for the oracle, differential checking, fuzzing and slide checks."""

import json

from scoutstr import ALGORITHMS, AlgorithmId, from_string
from scoutstr.verify import (
    differential_check,
    exhaustive_cases,
    fuzz_cases,
    naive_index_of,
    oracle_index_of,
    run_verification,
    slide_soundness_check,
    window_matches_at,
)


class TestOracles:
    def test_oracle_and_naive_agree(self):
        pairs = [
            ("", ""), ("abc", ""), ("", "a"), ("abcabc", "cab"),
            ("aaaa", "aab"), ("mississippi", "issi"), ("ab", "abc"),
        ]
        for t, p in pairs:
            target, pattern = from_string(t), from_string(p)
            assert oracle_index_of(target, pattern) == naive_index_of(target, pattern)

    def test_window_matches_at(self):
        target, pattern = from_string("abcabc"), from_string("cab")
        assert window_matches_at(target, pattern, 2)
        assert not window_matches_at(target, pattern, 1)
        assert not window_matches_at(target, pattern, 5)  # would overrun
        assert not window_matches_at(target, pattern, -1)


class TestFuzzStreams:
    def test_seeded_streams_are_reproducible(self):
        a = [(t.as_str(), p.as_str()) for t, p in fuzz_cases(7, 100)]
        b = [(t.as_str(), p.as_str()) for t, p in fuzz_cases(7, 100)]
        assert a == b

    def test_different_seeds_differ(self):
        a = [(t.as_str(), p.as_str()) for t, p in fuzz_cases(1, 50)]
        b = [(t.as_str(), p.as_str()) for t, p in fuzz_cases(2, 50)]
        assert a != b

    def test_stream_length(self):
        assert sum(1 for _ in fuzz_cases(3, 123)) == 123

    def test_exhaustive_sweep_size(self):
        # Sum over n<=10 of 2^n targets, times sum over m<=4 of 2^m patterns.
        targets = sum(2 ** n for n in range(11))
        patterns = sum(2 ** m for m in range(5))
        assert sum(1 for _ in exhaustive_cases()) == targets * patterns


class TestDifferentialCheck:
    def test_clean_algorithm_passes(self):
        report = differential_check(AlgorithmId.SCOUT, fuzz_cases(11, 300))
        assert report.ok
        assert report.cases_checked == 300

    def test_ascii_only_algorithm_skips_unicode_cases(self):
        report = differential_check(AlgorithmId.SUNDAY_QUICK, fuzz_cases(11, 300))
        assert report.ok
        assert report.cases_skipped > 0
        assert report.cases_checked + report.cases_skipped == 300

    def test_broken_searcher_is_caught(self):
        # Splice a deliberately wrong implementation into the registry and
        # confirm the differential harness reports disagreements.
        info = ALGORITHMS[AlgorithmId.BRUTE_FORCE]

        def broken(target, pattern):
            result = info.search(target, pattern)
            if result.index is not None and result.index > 0:
                return type(result)(result.index - 1, result.metrics)
            return result

        original = ALGORITHMS[AlgorithmId.BRUTE_FORCE]
        ALGORITHMS[AlgorithmId.BRUTE_FORCE] = type(info)(
            info.id, broken, info.ascii_only, info.kernel_name
        )
        try:
            report = differential_check(
                AlgorithmId.BRUTE_FORCE, fuzz_cases(5, 200), check_kernel=False
            )
        finally:
            ALGORITHMS[AlgorithmId.BRUTE_FORCE] = original
        assert not report.ok
        assert report.disagreements
        d = report.disagreements[0]
        assert d.got != d.expected

    def test_kernel_route_is_checked(self):
        report = differential_check(
            AlgorithmId.BRUTE_FORCE, fuzz_cases(5, 100), check_kernel=True
        )
        assert report.ok


class TestSlideSoundness:
    def test_walkthrough_case_passes_with_events(self):
        verdict = slide_soundness_check(
            from_string("aaacbabaaaabcbaabcaabacab"), from_string("aaba")
        )
        assert verdict.passed
        assert verdict.index == 18
        assert any(e.kind == "twin" for e in verdict.events)

    def test_no_slide_case_passes_trivially(self):
        verdict = slide_soundness_check(from_string("aaaa"), from_string("aa"))
        assert verdict.passed
        assert verdict.index == 0

    def test_seeded_batch(self):
        for target, pattern in fuzz_cases(43, 100):
            assert slide_soundness_check(target, pattern).passed


class TestVerificationReport:
    def test_small_run_is_green_and_serializable(self):
        report = run_verification(
            [AlgorithmId.SCOUT, AlgorithmId.KMP], seed=9, fuzz_count=200,
            slide_count=50,
        )
        assert report.ok
        assert report.slide_checked == 50
        doc = json.loads(report.to_json())
        assert doc["ok"] is True
        assert doc["seed"] == 9
        assert {d["algorithm"] for d in doc["differential"]} == {"scout", "kmp"}

    def test_slide_checks_only_run_when_scout_selected(self):
        report = run_verification([AlgorithmId.KMP], seed=9, fuzz_count=50)
        assert report.slide_checked == 0
