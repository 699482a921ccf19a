"""Exact substring search with instrumented counters.

Thirteen first-occurrence algorithms — Scout and its variants, rolling
signatures, and the classical exemplars — each reporting exact character
comparisons, memory lookups, and heavy arithmetic, plus testbed
generators, differential verification, and a benchmark harness.
"""

from .algorithms import (
    ALGORITHMS,
    AlgorithmId,
    AlgorithmInfo,
    MatchResult,
    dispatch,
    parse_algorithm,
    supports,
)
from .text import (
    CodePointText,
    Metrics,
    TextDecodeError,
    UnsupportedCharsetError,
    from_string,
    from_utf8,
)

__version__ = "0.1.0"

__all__ = [
    "ALGORITHMS",
    "AlgorithmId",
    "AlgorithmInfo",
    "CodePointText",
    "MatchResult",
    "Metrics",
    "TextDecodeError",
    "UnsupportedCharsetError",
    "__version__",
    "dispatch",
    "from_string",
    "from_utf8",
    "parse_algorithm",
    "supports",
]
