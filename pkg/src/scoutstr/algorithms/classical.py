"""Classical comparator algorithms: brute force, KMP, Boyer-Moore,
Horspool and Sunday Quick Search, all with exact operation counters.

Counting conventions (shared with the rest of the package):

* every indexed read of a pattern or target character is one memory lookup,
* every read or write of an auxiliary table slot (bad-character table,
  prefix table) is one memory lookup, bulk default-fills included,
* every character-vs-character equality test is one comparison, during
  preprocessing as much as during the search.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from ..text import CodePointText, Metrics
from ._shared import MatchResult, empty_or_oversized, require_ascii

TABLE_SIZE = 256


class BadCharVariant(Enum):
    BOYER_MOORE = "boyermoore"
    HORSPOOL = "horspool"
    SUNDAY = "sunday"


@dataclass(frozen=True)
class BadCharTable:
    """256-entry shift table keyed by character value."""

    variant: BadCharVariant
    shift: tuple[int, ...]

    def __post_init__(self) -> None:
        assert len(self.shift) == TABLE_SIZE


def brute_force_search(target: CodePointText, pattern: CodePointText) -> MatchResult:
    """Double-loop scan; every comparison reads one pattern and one target
    character, so lookups are exactly twice the comparisons."""
    t, p = target.points, pattern.points
    n, m = len(t), len(p)
    edge = empty_or_oversized(n, m)
    if edge is not None:
        return edge
    comps = lookups = 0
    index: Optional[int] = None
    for a in range(n - m + 1):
        j = 0
        while j < m:
            comps += 1
            lookups += 2
            if p[j] != t[a + j]:
                break
            j += 1
        if j == m:
            index = a
            break
    return MatchResult(index, Metrics(comps, lookups, 0))


def kmp_search(target: CodePointText, pattern: CodePointText) -> MatchResult:
    """Knuth-Morris-Pratt with the prefix table built per call.

    The table builder performs up to two character comparisons per pattern
    position (the fall-back test and the table-compression test), which is
    what the per-call comparison totals reflect.
    """
    t, p = target.points, pattern.points
    n, m = len(t), len(p)
    edge = empty_or_oversized(n, m)
    if edge is not None:
        return edge
    comps = lookups = 0

    nxt = [0] * m
    nxt[0] = -1
    lookups += 1
    i, j = 0, -1
    while i < m - 1:
        while j > -1:
            comps += 1
            lookups += 2
            if p[i] == p[j]:
                break
            lookups += 1
            j = nxt[j]
        i += 1
        j += 1
        comps += 1
        lookups += 2
        if p[i] == p[j]:
            lookups += 2
            nxt[i] = nxt[j]
        else:
            lookups += 1
            nxt[i] = j

    index: Optional[int] = None
    i, j = 0, 0  # i: pattern position, j: target position
    while j < n:
        while i > -1:
            comps += 1
            lookups += 2
            if p[i] == t[j]:
                break
            lookups += 1
            i = nxt[i]
        i += 1
        j += 1
        if i >= m:
            index = j - m
            break
    return MatchResult(index, Metrics(comps, lookups, 0))


def compute_bad_char_table(
    pattern: CodePointText,
    variant: BadCharVariant,
    metrics: Optional[Metrics] = None,
) -> BadCharTable:
    """Build the 256-entry shift table for the named Boyer-Moore-family
    variant; all table writes and pattern reads are charged as lookups."""
    require_ascii(pattern, pattern, f"bad-character table ({variant.value})")
    if metrics is None:
        metrics = Metrics()
    p = pattern.points
    m = len(p)
    if variant is BadCharVariant.SUNDAY:
        default = m + 1
        last = m  # writes cover positions 0..m-1
        value = lambda j: m - j  # noqa: E731
    else:
        # Boyer-Moore and Horspool share the classical last-occurrence table.
        default = max(m, 1)
        last = m - 1
        value = lambda j: m - 1 - j  # noqa: E731
    shift = [default] * TABLE_SIZE
    metrics.memory_lookups += TABLE_SIZE
    for j in range(last):
        metrics.memory_lookups += 2  # pattern read + table write
        shift[p[j]] = value(j)
    return BadCharTable(variant, tuple(shift))


def _good_suffix_table(p, m: int) -> tuple[list, int, int]:
    """Classical good-suffix shifts; returns (table, comparisons, lookups)."""
    comps = lookups = 0
    suff = [0] * m
    suff[m - 1] = m
    lookups += 1
    g, f = m - 1, 0
    for i in range(m - 2, -1, -1):
        if i > g:
            lookups += 1
            if suff[i + m - 1 - f] < i - g:
                lookups += 2
                suff[i] = suff[i + m - 1 - f]
                continue
        if i < g:
            g = i
        f = i
        while g >= 0:
            comps += 1
            lookups += 2
            if p[g] != p[g + m - 1 - f]:
                break
            g -= 1
        lookups += 1
        suff[i] = f - g

    gs = [m] * m
    lookups += m
    j = 0
    for i in range(m - 1, -1, -1):
        lookups += 1
        if suff[i] == i + 1:
            while j < m - 1 - i:
                lookups += 1
                if gs[j] == m:
                    lookups += 1
                    gs[j] = m - 1 - i
                j += 1
    for i in range(m - 1):
        lookups += 2
        gs[m - 1 - suff[i]] = m - 1 - i
    return gs, comps, lookups


def boyer_moore_search(target: CodePointText, pattern: CodePointText) -> MatchResult:
    """Boyer-Moore with both the bad-character and good-suffix rules,
    right-to-left window scan, tables rebuilt per call."""
    require_ascii(target, pattern, "Boyer-Moore")
    t, p = target.points, pattern.points
    n, m = len(t), len(p)
    edge = empty_or_oversized(n, m)
    if edge is not None:
        return edge
    metrics = Metrics()
    bc = compute_bad_char_table(pattern, BadCharVariant.BOYER_MOORE, metrics).shift
    gs, comps, lookups = _good_suffix_table(p, m)
    comps += metrics.comparisons
    lookups += metrics.memory_lookups

    index: Optional[int] = None
    a = 0
    while a <= n - m:
        j = m - 1
        while j >= 0:
            comps += 1
            lookups += 2
            if p[j] != t[a + j]:
                break
            j -= 1
        if j < 0:
            index = a
            break
        lookups += 3  # mismatched target char plus the two table probes
        a += max(gs[j], bc[t[a + j]] - m + 1 + j)
    return MatchResult(index, Metrics(comps, lookups, 0))


def horspool_search(target: CodePointText, pattern: CodePointText) -> MatchResult:
    """Horspool: bad-character shift keyed on the last character of the
    current window, which is read once and reused for the shift."""
    require_ascii(target, pattern, "Horspool")
    t, p = target.points, pattern.points
    n, m = len(t), len(p)
    edge = empty_or_oversized(n, m)
    if edge is not None:
        return edge
    metrics = Metrics()
    shift = compute_bad_char_table(pattern, BadCharVariant.HORSPOOL, metrics).shift
    comps = metrics.comparisons
    lookups = metrics.memory_lookups

    index: Optional[int] = None
    a = 0
    while a <= n - m:
        lookups += 1
        last = t[a + m - 1]
        comps += 1
        lookups += 1
        if p[m - 1] == last:
            j = 0
            while j < m - 1:
                comps += 1
                lookups += 2
                if p[j] != t[a + j]:
                    break
                j += 1
            if j == m - 1:
                index = a
                break
        lookups += 1
        a += shift[last]
    return MatchResult(index, Metrics(comps, lookups, 0))


def sunday_quick_search(target: CodePointText, pattern: CodePointText) -> MatchResult:
    """Sunday Quick Search: shift decided by the target character just past
    the current window, left-to-right window scan."""
    require_ascii(target, pattern, "Sunday Quick Search")
    t, p = target.points, pattern.points
    n, m = len(t), len(p)
    edge = empty_or_oversized(n, m)
    if edge is not None:
        return edge
    metrics = Metrics()
    shift = compute_bad_char_table(pattern, BadCharVariant.SUNDAY, metrics).shift
    comps = metrics.comparisons
    lookups = metrics.memory_lookups

    index: Optional[int] = None
    a = 0
    while a <= n - m:
        j = 0
        while j < m:
            comps += 1
            lookups += 2
            if p[j] != t[a + j]:
                break
            j += 1
        if j == m:
            index = a
            break
        if a + m >= n:
            break
        lookups += 2  # next target char plus the table probe
        a += shift[t[a + m]]
    return MatchResult(index, Metrics(comps, lookups, 0))
