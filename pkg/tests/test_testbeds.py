"""Tests for the depth/length testbed generators and the bundled corpus."""

import pytest

from scoutstr import AlgorithmId, dispatch
from scoutstr.testbeds import (
    TestbedError,
    default_corpus_spec,
    depth_grid,
    gen_depth_testbed,
    gen_length_testbed,
    length_grid,
    load_corpus,
    parse_pattern_file,
)


class TestDepthTestbed:
    def test_shape(self):
        case = gen_depth_testbed(50)
        assert len(case.target) == 105
        assert case.pattern.as_str() == "aabca"
        assert case.expected_index == 50
        assert case.label == "depth-50"
        assert case.depth_percent == 50.0

    def test_extremes(self):
        assert gen_depth_testbed(0).expected_index == 0
        assert gen_depth_testbed(100).expected_index == 100

    def test_depth_rounding(self):
        assert gen_depth_testbed(33.4).expected_index == 33

    def test_out_of_range_rejected(self):
        with pytest.raises(TestbedError):
            gen_depth_testbed(-1)
        with pytest.raises(TestbedError):
            gen_depth_testbed(101)

    def test_brute_comparisons_track_depth(self):
        # The filler never matches the pattern's first character, so the
        # brute-force cost is exactly prefix + 5 comparisons.
        for depth in (0, 10, 37, 100):
            case = gen_depth_testbed(depth)
            result = dispatch(AlgorithmId.BRUTE_FORCE, case.target, case.pattern)
            assert result.index == depth
            assert result.metrics.comparisons == depth + 5

    def test_grid_defaults(self):
        grid = depth_grid()
        assert [c.expected_index for c in grid] == list(range(0, 101, 10))


class TestLengthTestbed:
    def test_shape(self):
        case = gen_length_testbed(100)
        assert len(case.target) == 105
        assert case.expected_index == 100
        assert case.label == "length-100"

    def test_zero_prefix(self):
        assert gen_length_testbed(0).expected_index == 0

    def test_negative_rejected(self):
        with pytest.raises(TestbedError):
            gen_length_testbed(-1)

    def test_soft_cap_warns_but_generates(self):
        with pytest.warns(UserWarning):
            case = gen_length_testbed(10_001)
        assert case.expected_index == 10_001

    def test_grid_defaults(self):
        grid = length_grid()
        assert [c.expected_index for c in grid] == [0, 10, 100, 1_000, 10_000]


class TestPatternFile:
    def test_parses_comments_blanks_and_tabs(self):
        text = "# heading\n\n0.00\tTo be\n50.25\tor not to be\n"
        assert parse_pattern_file(text) == (("To be", 0.0), ("or not to be", 50.25))

    def test_pattern_may_contain_further_tabs_and_spaces(self):
        assert parse_pattern_file("1.5\ta\tb c") == (("a\tb c", 1.5),)

    def test_malformed_line_rejected(self):
        with pytest.raises(TestbedError):
            parse_pattern_file("no-tab-here")
        with pytest.raises(TestbedError):
            parse_pattern_file("abc\tpattern")


class TestCorpus:
    def test_ten_calibrated_patterns(self):
        cases = load_corpus()
        assert len(cases) == 10
        depths = [c.depth_percent for c in cases]
        assert depths == sorted(depths)
        assert depths[0] == 0.0
        assert depths[-1] == 100.0

    def test_corpus_is_single_line_ascii(self):
        cases = load_corpus()
        target = cases[0].target
        assert target.is_ascii()
        assert "\n" not in target.as_str()

    def test_every_case_is_oracle_verified(self):
        for case in load_corpus():
            t, p = case.target.as_str(), case.pattern.as_str()
            assert t.find(p) == case.expected_index

    def test_measured_depths_match_declared(self):
        for case in load_corpus():
            n, m = len(case.target), len(case.pattern)
            measured = 100.0 * case.expected_index / (n - m)
            assert abs(measured - case.depth_percent) <= 0.5

    def test_shallowest_pattern_opens_the_soliloquy(self):
        cases = load_corpus()
        assert cases[0].expected_index == 0
        assert cases[0].pattern.as_str().startswith("To be")

    def test_spec_lists_the_bundled_files(self):
        spec = default_corpus_spec()
        assert spec.corpus_path.name == "hamlet.txt"
        assert len(spec.patterns) == 10
