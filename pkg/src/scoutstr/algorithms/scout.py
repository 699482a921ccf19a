"""The Scout algorithm and its variants.

Scout runs a sequential comparison from the current alignment.  On a
mismatch, the mismatched pattern character becomes the "scout" and marches
forward through the target until it finds itself; the pattern is then
realigned so the scout's pattern position sits on the found target
position.  During sequential search, matching a character that equals the
scout character and precedes the scout's pattern position (a "twin")
licenses an even larger slide.

Twin slides are deferred and guarded.  On a twin hit the search computes
the deepest run of upcoming alignments that known facts exclude — the
march proved a scout-free stretch of the target from its mismatch position
up to the scout's found position, and any alignment placing a non-scout
pattern character on the found position cannot match either — and records
it, but keeps scanning the current window.  The slide is taken only after
the window actually mismatches, so a true match at the current alignment
is never abandoned and every skipped alignment is individually ruled out.
Pattern reads made by the exclusion walk are charged as comparisons and
lookups like any other.

Variants:

* Scout Simple always uses the last pattern character as the scout and
  never performs twin checks.
* Scout Twin precomputes, per pattern position, the first earlier position
  holding the same character, replacing the twin comparisons with table
  probes.
* Scout Variant checks for a twin before checking the target character.
* Scout Sunday starts from Scout Simple, applies the Sunday bad-character
  shift on a mismatch, then marches the scout from the shifted alignment.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..text import CodePointText, Metrics
from ._shared import MatchResult, SlideEvent, empty_or_oversized, require_ascii
from .classical import BadCharVariant, compute_bad_char_table


@dataclass(frozen=True)
class TwinTable:
    """Per pattern position, the first earlier position holding the same
    character (None when the character has no earlier occurrence)."""

    first_occurrence: tuple[Optional[int], ...]

    def entries(self) -> dict[int, int]:
        return {
            k: w for k, w in enumerate(self.first_occurrence) if w is not None
        }


def _twin_scan(p, m: int) -> tuple[list, int, int]:
    """Quadratic first-occurrence scan; returns (table, comps, lookups).

    The default fill, every probe's two character reads, and every twin
    write are all charged, matching the per-call preprocessing cost the
    search variants report.
    """
    comps = lookups = 0
    first: list = [None] * m
    lookups += m
    for k in range(1, m):
        for w in range(k):
            comps += 1
            lookups += 2
            if p[w] == p[k]:
                lookups += 1
                first[k] = w
                break
    return first, comps, lookups


def _sound_slide(p, m, target_pos, pattern_pos, scout_pos, scout_char, march_origin):
    """Deepest contiguous run of excluded alignments past ``target_pos``.

    An alignment ``a`` is excluded when its twin position lands in the
    scout-free region ``[march_origin, scout_pos)`` or when it would place
    a non-scout pattern character on ``scout_pos``.  Returns (new_target,
    comps, lookups); new_target == target_pos means nothing is excluded.
    """
    tmp_pos = scout_pos - pattern_pos - 1
    comps = lookups = 0
    a = target_pos + 1
    while a <= tmp_pos:
        if a + pattern_pos >= march_origin:
            a += 1
            continue
        d = scout_pos - a
        if d < m:
            comps += 1
            lookups += 1
            if p[d] != scout_char:
                a += 1
                continue
        break
    return a - 1, comps, lookups


def compute_twin_table(
    pattern: CodePointText, metrics: Optional[Metrics] = None
) -> TwinTable:
    first, comps, lookups = _twin_scan(pattern.points, len(pattern))
    if metrics is not None:
        metrics.comparisons += comps
        metrics.memory_lookups += lookups
    return TwinTable(tuple(first))


def scout_search(
    target: CodePointText,
    pattern: CodePointText,
    slide_log: Optional[list] = None,
) -> MatchResult:
    """Scout with in-line twin detection.

    When ``slide_log`` is given, every scout and twin slide is appended as a
    :class:`SlideEvent`; the log is a verification hook and never changes
    the result or the counters.
    """
    t, p = target.points, pattern.points
    n, m = len(t), len(p)
    edge = empty_or_oversized(n, m)
    if edge is not None:
        return edge
    comps = lookups = 0
    len_diff = n - m
    target_pos = -1
    scout_char = -1  # sentinel; twin checks are guarded by scout_pos
    scout_pos = -1
    march_origin = n  # target position where the last march began
    index: Optional[int] = None

    while True:
        target_pos += 1
        if target_pos > len_diff:
            break
        mismatched = False
        pending = target_pos  # deepest excluded alignment found so far
        pattern_pos = -1
        while True:
            pattern_pos += 1
            if pattern_pos >= m:
                break
            comps += 1
            lookups += 2
            if p[pattern_pos] != t[target_pos + pattern_pos]:
                mismatched = True
                break
            tmp_pos = scout_pos - pattern_pos - 1
            if target_pos < tmp_pos:
                # Twin check re-reads the matched pattern character.
                comps += 1
                lookups += 1
                if p[pattern_pos] == scout_char:
                    new_target, c, l = _sound_slide(
                        p, m, target_pos, pattern_pos, scout_pos,
                        scout_char, march_origin,
                    )
                    comps += c
                    lookups += l
                    if new_target > pending:
                        pending = new_target
        if not mismatched:
            index = target_pos
            break
        if pending > target_pos:
            if slide_log is not None:
                slide_log.append(SlideEvent("twin", target_pos, pending + 1))
            target_pos = pending
            continue

        # The mismatched pattern character becomes the scout and marches.
        march_bound = len_diff + pattern_pos
        lookups += 1
        scout_char = p[pattern_pos]
        scout_pos = target_pos + pattern_pos
        march_origin = scout_pos
        exhausted = False
        while True:
            scout_pos += 1
            if scout_pos > march_bound:
                exhausted = True
                break
            comps += 1
            lookups += 1
            if scout_char == t[scout_pos]:
                break
        if exhausted:
            break
        new_pos = scout_pos - pattern_pos - 1
        if slide_log is not None:
            slide_log.append(SlideEvent("scout", target_pos, new_pos + 1))
        target_pos = new_pos
    return MatchResult(index, Metrics(comps, lookups, 0))


def scout_variant_search(target: CodePointText, pattern: CodePointText) -> MatchResult:
    """Scout with the twin check performed before the target-character check."""
    t, p = target.points, pattern.points
    n, m = len(t), len(p)
    edge = empty_or_oversized(n, m)
    if edge is not None:
        return edge
    comps = lookups = 0
    len_diff = n - m
    target_pos = -1
    scout_char = -1
    scout_pos = -1
    march_origin = n
    index: Optional[int] = None

    while True:
        target_pos += 1
        if target_pos > len_diff:
            break
        mismatched = False
        pending = target_pos
        pattern_pos = -1
        while True:
            pattern_pos += 1
            if pattern_pos >= m:
                break
            tmp_pos = scout_pos - pattern_pos - 1
            if target_pos < tmp_pos:
                comps += 1
                lookups += 1
                if p[pattern_pos] == scout_char:
                    new_target, c, l = _sound_slide(
                        p, m, target_pos, pattern_pos, scout_pos,
                        scout_char, march_origin,
                    )
                    comps += c
                    lookups += l
                    if new_target > pending:
                        pending = new_target
            comps += 1
            lookups += 2
            if p[pattern_pos] != t[target_pos + pattern_pos]:
                mismatched = True
                break
        if not mismatched:
            index = target_pos
            break
        if pending > target_pos:
            target_pos = pending
            continue

        march_bound = len_diff + pattern_pos
        lookups += 1
        scout_char = p[pattern_pos]
        scout_pos = target_pos + pattern_pos
        march_origin = scout_pos
        exhausted = False
        while True:
            scout_pos += 1
            if scout_pos > march_bound:
                exhausted = True
                break
            comps += 1
            lookups += 1
            if scout_char == t[scout_pos]:
                break
        if exhausted:
            break
        target_pos = scout_pos - pattern_pos - 1
    return MatchResult(index, Metrics(comps, lookups, 0))


def scout_twin_search(target: CodePointText, pattern: CodePointText) -> MatchResult:
    """Scout with the twin positions precomputed per call.

    The twin detection and the exclusion walk become first-occurrence
    table probes, so they cost no character comparisons; the quadratic
    preprocessing cost is charged to this call instead.
    """
    t, p = target.points, pattern.points
    n, m = len(t), len(p)
    edge = empty_or_oversized(n, m)
    if edge is not None:
        return edge
    first, comps, lookups = _twin_scan(p, m)
    len_diff = n - m
    target_pos = -1
    scout_pos = -1
    scout_char = -1
    march_origin = n
    twin_w: Optional[int] = None
    index: Optional[int] = None

    while True:
        target_pos += 1
        if target_pos > len_diff:
            break
        mismatched = False
        pending = target_pos
        pattern_pos = -1
        while True:
            pattern_pos += 1
            if pattern_pos >= m:
                break
            comps += 1
            lookups += 2
            if p[pattern_pos] != t[target_pos + pattern_pos]:
                mismatched = True
                break
            if twin_w is not None and pattern_pos == twin_w:
                tmp_pos = scout_pos - pattern_pos - 1
                if target_pos < tmp_pos:
                    # Same exclusion walk as Scout's, but the pattern-vs-
                    # scout test is a first-occurrence table probe: p[d]
                    # equals the scout character iff first[d] == twin_w.
                    a = target_pos + 1
                    while a <= tmp_pos:
                        if a + pattern_pos >= march_origin:
                            a += 1
                            continue
                        d = scout_pos - a
                        if d < m:
                            lookups += 1
                            if first[d] != twin_w:
                                a += 1
                                continue
                        break
                    if a - 1 > pending:
                        pending = a - 1
        if not mismatched:
            index = target_pos
            break
        if pending > target_pos:
            target_pos = pending
            continue

        march_bound = len_diff + pattern_pos
        lookups += 2  # scout char read plus the twin-table probe
        scout_char = p[pattern_pos]
        twin_w = first[pattern_pos]
        scout_pos = target_pos + pattern_pos
        march_origin = scout_pos
        exhausted = False
        while True:
            scout_pos += 1
            if scout_pos > march_bound:
                exhausted = True
                break
            comps += 1
            lookups += 1
            if scout_char == t[scout_pos]:
                break
        if exhausted:
            break
        target_pos = scout_pos - pattern_pos - 1
    return MatchResult(index, Metrics(comps, lookups, 0))


def scout_simple_search(target: CodePointText, pattern: CodePointText) -> MatchResult:
    """Scout with the last pattern character as the permanent scout and no
    twin checks at all."""
    t, p = target.points, pattern.points
    n, m = len(t), len(p)
    edge = empty_or_oversized(n, m)
    if edge is not None:
        return edge
    comps = lookups = 0
    len_diff = n - m
    target_pos = -1
    index: Optional[int] = None

    while True:
        target_pos += 1
        if target_pos > len_diff:
            break
        mismatched = False
        pattern_pos = -1
        while True:
            pattern_pos += 1
            if pattern_pos >= m:
                break
            comps += 1
            lookups += 2
            if p[pattern_pos] != t[target_pos + pattern_pos]:
                mismatched = True
                break
        if not mismatched:
            index = target_pos
            break

        lookups += 1
        scout_char = p[m - 1]
        scout_pos = target_pos + m - 1
        exhausted = False
        while True:
            scout_pos += 1
            if scout_pos > n - 1:
                exhausted = True
                break
            comps += 1
            lookups += 1
            if scout_char == t[scout_pos]:
                break
        if exhausted:
            break
        target_pos = scout_pos - m
    return MatchResult(index, Metrics(comps, lookups, 0))


def scout_sunday_search(target: CodePointText, pattern: CodePointText) -> MatchResult:
    """Scout Simple control flow with a Sunday bad-character shift applied
    first on every mismatch, then a scout march from the shifted alignment;
    the final alignment is therefore at least as far as either rule alone."""
    require_ascii(target, pattern, "Scout Sunday")
    t, p = target.points, pattern.points
    n, m = len(t), len(p)
    edge = empty_or_oversized(n, m)
    if edge is not None:
        return edge
    metrics = Metrics()
    shift = compute_bad_char_table(pattern, BadCharVariant.SUNDAY, metrics).shift
    comps = metrics.comparisons
    lookups = metrics.memory_lookups
    len_diff = n - m
    target_pos = -1
    index: Optional[int] = None

    while True:
        target_pos += 1
        if target_pos > len_diff:
            break
        mismatched = False
        pattern_pos = -1
        while True:
            pattern_pos += 1
            if pattern_pos >= m:
                break
            comps += 1
            lookups += 2
            if p[pattern_pos] != t[target_pos + pattern_pos]:
                mismatched = True
                break
        if not mismatched:
            index = target_pos
            break

        if target_pos + m >= n:
            break
        lookups += 2  # next target char plus the table probe
        candidate = target_pos + shift[t[target_pos + m]]
        if candidate > len_diff:
            break
        # March the last-character scout from the shifted alignment; the
        # shifted alignment itself has not been ruled out, so the march
        # starts at its own window end.
        lookups += 1
        scout_char = p[m - 1]
        scout_pos = candidate + m - 2
        exhausted = False
        while True:
            scout_pos += 1
            if scout_pos > n - 1:
                exhausted = True
                break
            comps += 1
            lookups += 1
            if scout_char == t[scout_pos]:
                break
        if exhausted:
            break
        target_pos = scout_pos - m
    return MatchResult(index, Metrics(comps, lookups, 0))
