"""Synthetic testbed generators and the bundled Hamlet corpus.

Three case families: the depth testbed ("aabca" planted at a chosen depth
inside a 105-character 'x' field), the length testbed ("aabca" appended to
an 'x' prefix of chosen length), and the soliloquy corpus with its ten
calibrated patterns.  Every generated case re-verifies its expected index
against the oracle before it is handed out.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Optional, Sequence

from .text import CodePointText, from_string
from .verify import oracle_index_of

FILLER = "x"
PLANTED_PATTERN = "aabca"
LENGTH_SOFT_CAP = 10_000

DATA_PACKAGE = "scoutstr.data"
CORPUS_FILENAME = "hamlet.txt"
PATTERNS_FILENAME = "hamlet_patterns.txt"
DEPTH_TOLERANCE = 0.5


class TestbedError(ValueError):
    """A testbed could not be generated or loaded."""


@dataclass(frozen=True)
class TestCase:
    """One (target, pattern) pair with its known answer.

    ``depth_percent`` is 100 * expected_index / (n - m) when defined.
    """

    target: CodePointText
    pattern: CodePointText
    expected_index: Optional[int]
    label: str
    depth_percent: Optional[float] = None


@dataclass(frozen=True)
class CorpusSpec:
    """A corpus file plus its ordered (pattern, declared depth) list."""

    corpus_path: Path
    patterns: tuple[tuple[str, float], ...]


def _checked(target: str, pattern: str, label: str, depth: Optional[float]) -> TestCase:
    t = from_string(target)
    p = from_string(pattern)
    expected = oracle_index_of(t, p)
    if expected is None:
        raise TestbedError(f"{label}: generated target does not contain the pattern")
    return TestCase(t, p, expected, label, depth)


def gen_depth_testbed(depth_percent: float) -> TestCase:
    """Plant "aabca" at the given depth inside a 105-character target.

    The prefix length is round(depth_percent); the filler character 'x'
    never occurs in the pattern, so a brute-force scan costs exactly
    prefix + 5 comparisons.
    """
    if not 0 <= depth_percent <= 100:
        raise TestbedError(f"depth_percent must be in [0, 100], got {depth_percent}")
    prefix = round(depth_percent)
    target = FILLER * prefix + PLANTED_PATTERN + FILLER * (100 - prefix)
    case = _checked(target, PLANTED_PATTERN, f"depth-{prefix}", float(prefix))
    assert case.expected_index == prefix
    return case


def gen_length_testbed(prefix_len: int) -> TestCase:
    """Append "aabca" to an 'x' prefix of the given length (n = prefix + 5)."""
    if prefix_len < 0:
        raise TestbedError(f"prefix_len must be nonnegative, got {prefix_len}")
    if prefix_len > LENGTH_SOFT_CAP:
        warnings.warn(
            f"prefix_len {prefix_len} exceeds the soft cap {LENGTH_SOFT_CAP}",
            stacklevel=2,
        )
    target = FILLER * prefix_len + PLANTED_PATTERN
    case = _checked(target, PLANTED_PATTERN, f"length-{prefix_len}", None)
    assert case.expected_index == prefix_len
    return case


def _data_path(filename: str) -> Path:
    with resources.as_file(resources.files(DATA_PACKAGE) / filename) as path:
        return Path(path)


def parse_pattern_file(text: str) -> tuple[tuple[str, float], ...]:
    """Parse the pattern list: one 'declared_depth<TAB>pattern' per line.

    Blank lines and lines starting with '#' are ignored.  Depths are
    decimal percentages; patterns run to the end of the line verbatim.
    """
    out: list[tuple[str, float]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        try:
            depth_text, pattern = line.split("\t", 1)
            depth = float(depth_text)
        except ValueError:
            raise TestbedError(f"pattern file line {lineno}: expected 'depth<TAB>pattern'")
        if not pattern:
            raise TestbedError(f"pattern file line {lineno}: empty pattern")
        out.append((pattern, depth))
    return tuple(out)


def default_corpus_spec() -> CorpusSpec:
    """The bundled Hamlet soliloquy and its ten calibrated patterns."""
    patterns = parse_pattern_file(
        (resources.files(DATA_PACKAGE) / PATTERNS_FILENAME).read_text("utf-8")
    )
    return CorpusSpec(_data_path(CORPUS_FILENAME), patterns)


def load_corpus(spec: Optional[CorpusSpec] = None) -> list[TestCase]:
    """Load the corpus and one oracle-verified TestCase per pattern.

    Each pattern must occur in the corpus, and its measured depth
    100*i/(n-m) must sit within +-0.5 points of the declared depth.
    """
    if spec is None:
        spec = default_corpus_spec()
    try:
        raw = spec.corpus_path.read_text("utf-8")
    except FileNotFoundError:
        raise TestbedError(f"corpus file not found: {spec.corpus_path}")
    corpus = raw.replace("\r\n", " ").replace("\n", " ").replace("\r", " ").strip()
    target = from_string(corpus)
    n = len(target)
    cases: list[TestCase] = []
    for pattern_text, declared in spec.patterns:
        pattern = from_string(pattern_text)
        index = oracle_index_of(target, pattern)
        if index is None:
            raise TestbedError(f"pattern not found in corpus: {pattern_text!r}")
        m = len(pattern)
        measured = 100.0 * index / (n - m) if n > m else 0.0
        if abs(measured - declared) > DEPTH_TOLERANCE:
            raise TestbedError(
                f"pattern {pattern_text!r}: measured depth {measured:.2f} "
                f"disagrees with declared {declared:.2f}"
            )
        cases.append(TestCase(target, pattern, index, f"corpus-{declared:.2f}", declared))
    return cases


def depth_grid(depths: Sequence[float] = tuple(range(0, 101, 10))) -> list[TestCase]:
    """The standard 11-point depth grid {0, 10, ..., 100}."""
    return [gen_depth_testbed(d) for d in depths]


def length_grid(
    prefix_lens: Sequence[int] = (0, 10, 100, 1_000, 10_000),
) -> list[TestCase]:
    """The standard length grid (prefixes 0 through 10,000)."""
    return [gen_length_testbed(p) for p in prefix_lens]
