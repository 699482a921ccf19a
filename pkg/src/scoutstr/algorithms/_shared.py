"""Shared result/event types and helpers for the search implementations."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..text import CodePointText, Metrics, UnsupportedCharsetError


@dataclass(frozen=True)
class MatchResult:
    """First-occurrence index (None when absent) plus the counters that
    were accumulated producing it."""

    index: Optional[int]
    metrics: Metrics

    @property
    def found(self) -> bool:
        return self.index is not None


@dataclass(frozen=True)
class SlideEvent:
    """One pattern slide: alignment starts in (from_alignment, to_alignment)
    exclusive were skipped without being tested."""

    kind: str  # "scout" or "twin"
    from_alignment: int
    to_alignment: int


def require_ascii(target: CodePointText, pattern: CodePointText, algorithm: str) -> None:
    """Gate for the ASCII-restricted algorithms (256-entry shift tables).

    The check is O(1): the maximum code point is cached on the text, so the
    gate never perturbs the per-call counters.
    """
    if not (target.is_ascii() and pattern.is_ascii()):
        raise UnsupportedCharsetError(
            f"{algorithm} supports ASCII input only; "
            "input contains a non-ASCII code point"
        )


def empty_or_oversized(n: int, m: int) -> Optional[MatchResult]:
    """Apply the shared edge conventions: empty pattern matches at 0,
    a pattern longer than the target never matches."""
    if m == 0:
        return MatchResult(0, Metrics())
    if m > n:
        return MatchResult(None, Metrics())
    return None
