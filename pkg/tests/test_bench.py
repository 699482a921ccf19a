"""Tests for the benchmark harness: grids, determinism, and report formats."""

import json

import pytest

from scoutstr import AlgorithmId
from scoutstr.bench import (
    CSV_HEADER,
    BenchConfig,
    BenchError,
    emit_report,
    run_bench,
    summary_table,
)
from scoutstr.testbeds import TestCase, depth_grid, load_corpus
from scoutstr.text import from_string

FOUR = (
    AlgorithmId.BRUTE_FORCE,
    AlgorithmId.SCOUT,
    AlgorithmId.KMP,
    AlgorithmId.SUNDAY_QUICK,
)


class TestConfig:
    def test_validation(self):
        with pytest.raises(BenchError):
            BenchConfig(FOUR, "depth", iterations=0)
        with pytest.raises(BenchError):
            BenchConfig(FOUR, "depth", mode="typed")
        with pytest.raises(BenchError):
            BenchConfig(FOUR, "width")
        with pytest.raises(BenchError):
            BenchConfig(FOUR, "depth", warmup_iterations=-1)


class TestCountedGrid:
    def test_four_by_eleven_grid(self):
        config = BenchConfig(FOUR, "depth", mode="counted")
        run = run_bench(config, depth_grid())
        assert len(run.records) == 44
        assert not run.skipped

    def test_brute_comparisons_are_monotone_in_depth(self):
        config = BenchConfig((AlgorithmId.BRUTE_FORCE,), "depth", mode="counted")
        run = run_bench(config, depth_grid())
        comps = [r.comparisons for r in run.records]
        assert comps == [depth + 5 for depth in range(0, 101, 10)]

    def test_counted_emission_is_deterministic(self):
        config = BenchConfig(FOUR, "depth", mode="counted")
        first = emit_report(run_bench(config, depth_grid()).records)
        second = emit_report(run_bench(config, depth_grid()).records)
        assert first == second  # byte-identical

    def test_wrong_answer_aborts_the_run(self):
        bogus = TestCase(from_string("xxaabca"), from_string("aabca"), 0, "bogus")
        config = BenchConfig((AlgorithmId.BRUTE_FORCE,), "depth", mode="counted")
        with pytest.raises(BenchError):
            run_bench(config, [bogus])

    def test_unsupported_cells_are_skipped(self):
        case = TestCase(from_string("ααβ"), from_string("β"), 2, "greek")
        config = BenchConfig(
            (AlgorithmId.BRUTE_FORCE, AlgorithmId.SUNDAY_QUICK), "depth",
            mode="counted",
        )
        run = run_bench(config, [case])
        assert len(run.records) == 1
        assert len(run.skipped) == 1
        assert run.skipped[0].algorithm is AlgorithmId.SUNDAY_QUICK


class TestTimedMode:
    def test_timed_cell_reports_mean_ns(self):
        config = BenchConfig(
            (AlgorithmId.SCOUT,), "depth", iterations=20, warmup_iterations=5,
            mode="timed",
        )
        run = run_bench(config, [depth_grid()[0]])
        (record,) = run.records
        assert record.mean_time_ns is not None and record.mean_time_ns > 0
        assert record.comparisons is None
        assert run.checksum == 0  # planted at index 0, 20 iterations

    def test_timed_mode_asserts_the_answer(self):
        bogus = TestCase(from_string("xxaabca"), from_string("aabca"), 1, "bogus")
        config = BenchConfig(
            (AlgorithmId.BRUTE_FORCE,), "depth", iterations=2,
            warmup_iterations=1, mode="timed",
        )
        with pytest.raises(BenchError):
            run_bench(config, [bogus])


class TestReports:
    def test_csv_shape(self):
        config = BenchConfig((AlgorithmId.BRUTE_FORCE,), "depth", mode="counted")
        text = emit_report(run_bench(config, depth_grid()[:2]).records)
        lines = text.splitlines()
        assert lines[0] == CSV_HEADER
        # two records, three counter metrics each
        assert len(lines) == 1 + 2 * 3
        assert lines[1].startswith("brute,depth-0,0,comparisons,5,")
        assert text.endswith("\n") and "\r" not in text

    def test_corpus_csv_row(self):
        corpus = load_corpus()
        config = BenchConfig((AlgorithmId.BRUTE_FORCE,), "corpus", mode="counted")
        text = emit_report(run_bench(config, corpus[:1]).records)
        assert "brute,corpus-0.00,0,comparisons,41,10000" in text

    def test_json_round_trip(self):
        config = BenchConfig((AlgorithmId.SCOUT,), "depth", mode="counted")
        doc = json.loads(emit_report(run_bench(config, depth_grid()[:1]).records, "json"))
        assert doc[0]["algorithm"] == "scout"
        assert doc[0]["case"] == "depth-0"
        assert set(doc[0]) >= {"comparisons", "memory_lookups", "heavy_arith"}

    def test_unknown_format_rejected(self):
        with pytest.raises(ValueError):
            emit_report([], "xml")

    def test_summary_table_mentions_each_record(self):
        config = BenchConfig((AlgorithmId.SCOUT,), "depth", mode="counted")
        run = run_bench(config, depth_grid()[:1])
        table = summary_table(run)
        assert "scout" in table
        assert "depth-0" in table
        assert "comparisons" in table
