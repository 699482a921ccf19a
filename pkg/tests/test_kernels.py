"""Tests for the uninstrumented kernels and the engine selection layer."""

import pytest

from scoutstr import ALGORITHMS, AlgorithmId, from_string, supports
from scoutstr.kernels import DEFAULT_ENGINE, available_engines, get_engine, get_kernel
from scoutstr.verify import fuzz_cases, oracle_index_of


class TestEngineSelection:
    def test_python_engine_is_always_available(self):
        assert "python" in available_engines()

    def test_default_engine_is_listed(self):
        assert DEFAULT_ENGINE in available_engines()

    def test_auto_resolves_to_the_default(self):
        assert get_engine("auto") is get_engine(None) is get_engine(DEFAULT_ENGINE)

    def test_unknown_engine_rejected(self):
        with pytest.raises(ValueError):
            get_engine("fortran")

    def test_engine_tags(self):
        for name in available_engines():
            assert get_engine(name).ENGINE == name

    def test_every_registry_kernel_exists_in_every_engine(self):
        for info in ALGORITHMS.values():
            for engine in available_engines():
                assert callable(get_kernel(info.kernel_name, engine))


class TestKernelCorrectness:
    @pytest.mark.parametrize("engine", available_engines())
    @pytest.mark.parametrize("algorithm", list(AlgorithmId))
    def test_kernels_match_the_oracle(self, engine, algorithm):
        kernel = get_kernel(ALGORITHMS[algorithm].kernel_name, engine)
        for target, pattern in fuzz_cases(101, 150):
            if not supports(algorithm, target, pattern):
                continue
            expected = oracle_index_of(target, pattern)
            raw = kernel(target.points, pattern.points)
            assert (None if raw < 0 else raw) == expected

    @pytest.mark.parametrize("algorithm", list(AlgorithmId))
    def test_kernel_agrees_with_counted_implementation(self, algorithm):
        info = ALGORITHMS[algorithm]
        kernel = get_kernel(info.kernel_name)
        for target, pattern in fuzz_cases(102, 150):
            if not supports(algorithm, target, pattern):
                continue
            raw = kernel(target.points, pattern.points)
            assert (None if raw < 0 else raw) == info.search(target, pattern).index


@pytest.mark.skipif(
    len(available_engines()) < 2, reason="compiled engine not built"
)
class TestEngineAgreement:
    def test_compiled_and_python_agree(self):
        for info in ALGORITHMS.values():
            compiled = get_kernel(info.kernel_name, "compiled")
            python = get_kernel(info.kernel_name, "python")
            for target, pattern in fuzz_cases(103, 100):
                if not supports(info.id, target, pattern):
                    continue
                t, p = target.points, pattern.points
                assert compiled(t, p) == python(t, p)
