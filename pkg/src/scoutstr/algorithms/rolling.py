"""Rolling-signature searches: Sum, XOR and the classical Karp-Rabin.

A signature is a cheap summary of a fixed-width window, updated
incrementally as the window advances.  Signature equality tests are
integer comparisons and are deliberately not counted as character
comparisons; only the verification fall-back compares characters.
"""

from __future__ import annotations

from typing import Optional

from ..text import CodePointText, Metrics
from ._shared import MatchResult, empty_or_oversized, require_ascii

_MASK64 = (1 << 64) - 1

# Karp-Rabin parameters: base-256 polynomial hash modulo a fixed prime
# below 2^31.  Any classical parameterization works; this one is pinned so
# counter runs are reproducible bit-for-bit.
KARP_RABIN_BASE = 256
KARP_RABIN_MODULUS = 2_147_483_629


def _verify(t, p, i: int, m: int) -> tuple[bool, int, int]:
    """Character-by-character check of window i; returns (matched, comps, lookups)."""
    comps = lookups = 0
    j = 0
    while j < m:
        comps += 1
        lookups += 2
        if p[j] != t[i + j]:
            return False, comps, lookups
        j += 1
    return True, comps, lookups


def rolling_sum_search(target: CodePointText, pattern: CodePointText) -> MatchResult:
    """Signature = wrapping 64-bit sum of window code points.

    Overflow is harmless: a wrapped sum is still a valid signature, so the
    accumulator wraps rather than widening.  No multiplication, division or
    modulo is ever performed.
    """
    t, p = target.points, pattern.points
    n, m = len(t), len(p)
    edge = empty_or_oversized(n, m)
    if edge is not None:
        return edge
    comps = lookups = 0
    psig = tsig = 0
    for i in range(m):
        lookups += 2
        psig = (psig + p[i]) & _MASK64
        tsig = (tsig + t[i]) & _MASK64

    index: Optional[int] = None
    for i in range(n - m + 1):
        if psig == tsig:  # integer test, not a character comparison
            matched, c, lk = _verify(t, p, i, m)
            comps += c
            lookups += lk
            if matched:
                index = i
                break
        if i < n - m:
            lookups += 2
            tsig = (tsig - t[i] + t[i + m]) & _MASK64
    return MatchResult(index, Metrics(comps, lookups, 0))


def rolling_xor_search(target: CodePointText, pattern: CodePointText) -> MatchResult:
    """Signature = bitwise XOR of window code points; rolled by XOR-ing out
    the departing character and XOR-ing in the arriving one."""
    t, p = target.points, pattern.points
    n, m = len(t), len(p)
    edge = empty_or_oversized(n, m)
    if edge is not None:
        return edge
    comps = lookups = 0
    psig = tsig = 0
    for i in range(m):
        lookups += 2
        psig ^= p[i]
        tsig ^= t[i]

    index: Optional[int] = None
    for i in range(n - m + 1):
        if psig == tsig:
            matched, c, lk = _verify(t, p, i, m)
            comps += c
            lookups += lk
            if matched:
                index = i
                break
        if i < n - m:
            lookups += 2
            tsig ^= t[i] ^ t[i + m]
    return MatchResult(index, Metrics(comps, lookups, 0))


def karp_rabin_search(target: CodePointText, pattern: CodePointText) -> MatchResult:
    """Karp-Rabin polynomial rolling hash.

    Every multiplication and every modulo executed is charged to the
    heavy-arithmetic counter; this is the only algorithm in the package
    that incurs heavy arithmetic at all.
    """
    require_ascii(target, pattern, "Karp-Rabin")
    t, p = target.points, pattern.points
    n, m = len(t), len(p)
    edge = empty_or_oversized(n, m)
    if edge is not None:
        return edge
    comps = lookups = heavy = 0
    b, q = KARP_RABIN_BASE, KARP_RABIN_MODULUS

    hp = ht = 0
    for i in range(m):
        lookups += 2
        heavy += 4  # two multiplications, two modulos
        hp = (hp * b + p[i]) % q
        ht = (ht * b + t[i]) % q
    high = 1
    for _ in range(m - 1):
        heavy += 2
        high = (high * b) % q

    index: Optional[int] = None
    for i in range(n - m + 1):
        if hp == ht:
            matched, c, lk = _verify(t, p, i, m)
            comps += c
            lookups += lk
            if matched:
                index = i
                break
        if i < n - m:
            lookups += 2
            heavy += 3  # departing-char multiply, base multiply, modulo
            ht = ((ht - t[i] * high) * b + t[i + m]) % q
    return MatchResult(index, Metrics(comps, lookups, heavy))
