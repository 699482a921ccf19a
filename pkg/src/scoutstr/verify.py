"""Ground-truth oracle, differential fuzzing, and slide-soundness checks.

The oracle is the host runtime's own substring search (``str.find``), an
independent implementation that is correct for full Unicode; a naive
double-loop scan is kept alongside it for window-level checks.  Fuzzing is
fully seeded: a seed determines the case stream bit-for-bit.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .algorithms import ALGORITHMS, AlgorithmId, SlideEvent, scout_search, supports
from .kernels import get_kernel
from .text import CodePointText, from_string

EXHAUSTIVE_ALPHABET = "ab"
EXHAUSTIVE_MAX_N = 10
EXHAUSTIVE_MAX_M = 4

_ALPHABETS = {
    2: "ab",
    4: "abcd",
    26: "abcdefghijklmnopqrstuvwxyz",
    256: "bytes",  # code points 0..255
    0: "unicode",  # a spread of planes, including astral
}
_UNICODE_POINTS = (
    list(range(0x20, 0x7F)) + [0xE9, 0x3B1, 0x4E2D, 0x1F600, 0x10FFFF]
)


def oracle_index_of(target: CodePointText, pattern: CodePointText) -> Optional[int]:
    """First-occurrence index per the host runtime's substring search."""
    index = target.as_str().find(pattern.as_str())
    return None if index < 0 else index


def naive_index_of(target: CodePointText, pattern: CodePointText) -> Optional[int]:
    """Uninstrumented double-loop scan; second, fully transparent oracle."""
    t, p = target.points, pattern.points
    n, m = len(t), len(p)
    for a in range(n - m + 1):
        if all(p[j] == t[a + j] for j in range(m)):
            return a
    return None


def window_matches_at(target: CodePointText, pattern: CodePointText, index: int) -> bool:
    t, p = target.points, pattern.points
    m = len(p)
    if index < 0 or index + m > len(t):
        return False
    return all(p[j] == t[index + j] for j in range(m))


@dataclass(frozen=True)
class Disagreement:
    algorithm: str
    target: str
    pattern: str
    expected: Optional[int]
    got: Optional[int]
    route: str  # "counted" or "kernel"


@dataclass
class DifferentialReport:
    algorithm: str
    cases_checked: int = 0
    cases_skipped: int = 0
    disagreements: list[Disagreement] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.disagreements


def differential_check(
    algorithm: AlgorithmId,
    cases: Iterable[tuple[CodePointText, CodePointText]],
    check_kernel: bool = True,
) -> DifferentialReport:
    """Compare one algorithm against the oracle over a case stream.

    Cases outside the algorithm's supported character set are skipped and
    tallied.  When ``check_kernel`` is set, the uninstrumented timed kernel
    is held to the same answer as the counted implementation.
    """
    info = ALGORITHMS[algorithm]
    kernel = get_kernel(info.kernel_name) if check_kernel else None
    report = DifferentialReport(algorithm.value)
    for target, pattern in cases:
        if not supports(algorithm, target, pattern):
            report.cases_skipped += 1
            continue
        expected = oracle_index_of(target, pattern)
        got = info.search(target, pattern).index
        report.cases_checked += 1
        if got != expected:
            report.disagreements.append(
                Disagreement(
                    algorithm.value, target.as_str(), pattern.as_str(),
                    expected, got, "counted",
                )
            )
            continue
        if kernel is not None:
            raw = kernel(target.points, pattern.points)
            kgot = None if raw < 0 else raw
            if kgot != expected:
                report.disagreements.append(
                    Disagreement(
                        algorithm.value, target.as_str(), pattern.as_str(),
                        expected, kgot, "kernel",
                    )
                )
    return report


@dataclass(frozen=True)
class SlideVerdict:
    passed: bool
    events: tuple[SlideEvent, ...]
    index: Optional[int]
    counterexample: Optional[tuple[SlideEvent, int]] = None  # (event, alignment)


def slide_soundness_check(
    target: CodePointText, pattern: CodePointText
) -> SlideVerdict:
    """Run Scout with slide logging and brute-verify every slide.

    For each logged slide (from_alignment, to_alignment), every alignment
    strictly between the two must fail to match; any that matches is a
    counterexample and the verdict fails.
    """
    log: list[SlideEvent] = []
    result = scout_search(target, pattern, slide_log=log)
    expected = oracle_index_of(target, pattern)
    if result.index != expected:
        return SlideVerdict(False, tuple(log), result.index)
    for event in log:
        if event.to_alignment <= event.from_alignment:
            return SlideVerdict(False, tuple(log), result.index, (event, -1))
        for a in range(event.from_alignment + 1, event.to_alignment):
            if window_matches_at(target, pattern, a):
                return SlideVerdict(False, tuple(log), result.index, (event, a))
    return SlideVerdict(True, tuple(log), result.index)


def _random_text(rng: random.Random, alphabet_key: int, length: int) -> str:
    alphabet = _ALPHABETS[alphabet_key]
    if alphabet == "bytes":
        return "".join(chr(rng.randrange(256)) for _ in range(length))
    if alphabet == "unicode":
        return "".join(chr(rng.choice(_UNICODE_POINTS)) for _ in range(length))
    return "".join(rng.choice(alphabet) for _ in range(length))


def fuzz_cases(
    seed: int, count: int
) -> Iterable[tuple[CodePointText, CodePointText]]:
    """Seeded case stream over mixed alphabets and adversarial families.

    Lengths are biased small (most targets under a few hundred characters,
    occasionally up to 2,000; patterns up to 32).  One case in four comes
    from an adversarial family: periodic strings, a single repeated
    character, or a pattern cut from the target's edge.
    """
    rng = random.Random(seed)
    alphabet_keys = [2, 2, 2, 4, 4, 26, 26, 256, 0]
    length_caps = [16, 16, 16, 16, 64, 64, 64, 256, 256, 2000]
    for _ in range(count):
        key = rng.choice(alphabet_keys)
        n = rng.randint(0, rng.choice(length_caps))
        family = rng.randrange(8)
        if family == 0 and n > 0:  # periodic target
            period = _random_text(rng, key, rng.randint(1, 4))
            target = (period * (n // len(period) + 1))[:n]
        elif family == 1 and n > 0:  # single repeated character
            target = _random_text(rng, key, 1) * n
        else:
            target = _random_text(rng, key, n)
        m = rng.randint(0, min(32, max(n, 4)))
        if family == 2 and m <= n:  # pattern from the target's edge
            pattern = target[:m] if rng.random() < 0.5 else target[n - m:]
        elif family == 3 and m <= n and n > 0:  # pattern from the interior
            start = rng.randint(0, n - m)
            pattern = target[start:start + m]
        else:
            pattern = _random_text(rng, key, m)
        yield from_string(target), from_string(pattern)


def exhaustive_cases(
    alphabet: str = EXHAUSTIVE_ALPHABET,
    max_n: int = EXHAUSTIVE_MAX_N,
    max_m: int = EXHAUSTIVE_MAX_M,
) -> Iterable[tuple[CodePointText, CodePointText]]:
    """Every (target, pattern) pair over the alphabet up to the size caps."""
    targets = [
        "".join(chars)
        for n in range(max_n + 1)
        for chars in itertools.product(alphabet, repeat=n)
    ]
    patterns = [
        "".join(chars)
        for m in range(max_m + 1)
        for chars in itertools.product(alphabet, repeat=m)
    ]
    pattern_texts = [from_string(p) for p in patterns]
    for t in targets:
        target = from_string(t)
        for pattern in pattern_texts:
            yield target, pattern


@dataclass
class VerificationReport:
    seed: int
    fuzz_count: int
    exhaustive: bool
    differential: list[DifferentialReport] = field(default_factory=list)
    slide_checked: int = 0
    slide_failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.differential) and not self.slide_failures

    def to_json(self) -> str:
        doc = {
            "seed": self.seed,
            "fuzz_count": self.fuzz_count,
            "exhaustive": self.exhaustive,
            "ok": self.ok,
            "slide_checked": self.slide_checked,
            "slide_failures": self.slide_failures,
            "differential": [
                {
                    "algorithm": r.algorithm,
                    "cases_checked": r.cases_checked,
                    "cases_skipped": r.cases_skipped,
                    "disagreements": [
                        {
                            "target": d.target,
                            "pattern": d.pattern,
                            "expected": d.expected,
                            "got": d.got,
                            "route": d.route,
                        }
                        for d in r.disagreements
                    ],
                }
                for r in self.differential
            ],
        }
        return json.dumps(doc, indent=2, sort_keys=True)


def run_verification(
    algorithms: Optional[Sequence[AlgorithmId]] = None,
    seed: int = 42,
    fuzz_count: int = 10_000,
    exhaustive: bool = False,
    slide_count: int = 1_000,
) -> VerificationReport:
    """Differential-check the algorithms and slide-check Scout.

    The fuzz stream is materialized once and replayed per algorithm so all
    algorithms face identical cases.  Slide soundness runs on its own
    seeded stream of ``slide_count`` cases.
    """
    if algorithms is None:
        algorithms = list(ALGORITHMS)
    report = VerificationReport(seed, fuzz_count, exhaustive)
    cases = list(fuzz_cases(seed, fuzz_count))
    if exhaustive:
        cases.extend(exhaustive_cases())
    for algorithm in algorithms:
        report.differential.append(differential_check(algorithm, cases))
    if AlgorithmId.SCOUT in algorithms:
        for target, pattern in fuzz_cases(seed + 1, slide_count):
            report.slide_checked += 1
            verdict = slide_soundness_check(target, pattern)
            if not verdict.passed:
                report.slide_failures.append(
                    f"target={target.as_str()!r} pattern={pattern.as_str()!r} "
                    f"counterexample={verdict.counterexample}"
                )
    return report
