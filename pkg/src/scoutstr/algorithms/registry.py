"""Closed registry of the thirteen search algorithms and the dispatcher."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable

from ..text import CodePointText
from ._shared import MatchResult
from . import classical, rolling, scout


class AlgorithmId(Enum):
    """One value per search operation; the CLI token is the enum value."""

    BRUTE_FORCE = "brute"
    SCOUT = "scout"
    SCOUT_SIMPLE = "scoutsimple"
    SCOUT_TWIN = "scouttwin"
    SCOUT_VARIANT = "scoutvariant"
    SCOUT_SUNDAY = "scoutsunday"
    ROLLING_SUM = "rollingsum"
    ROLLING_XOR = "rollingxor"
    KARP_RABIN = "karprabin"
    KMP = "kmp"
    BOYER_MOORE = "boyermoore"
    HORSPOOL = "horspool"
    SUNDAY_QUICK = "sunday"


@dataclass(frozen=True)
class AlgorithmInfo:
    id: AlgorithmId
    search: Callable[[CodePointText, CodePointText], MatchResult]
    ascii_only: bool
    kernel_name: str  # uninstrumented kernel function, timed mode


ALGORITHMS: dict[AlgorithmId, AlgorithmInfo] = {
    info.id: info
    for info in [
        AlgorithmInfo(AlgorithmId.BRUTE_FORCE, classical.brute_force_search, False, "brute_force"),
        AlgorithmInfo(AlgorithmId.SCOUT, scout.scout_search, False, "scout"),
        AlgorithmInfo(AlgorithmId.SCOUT_SIMPLE, scout.scout_simple_search, False, "scout_simple"),
        AlgorithmInfo(AlgorithmId.SCOUT_TWIN, scout.scout_twin_search, False, "scout_twin"),
        AlgorithmInfo(AlgorithmId.SCOUT_VARIANT, scout.scout_variant_search, False, "scout_variant"),
        AlgorithmInfo(AlgorithmId.SCOUT_SUNDAY, scout.scout_sunday_search, True, "scout_sunday"),
        AlgorithmInfo(AlgorithmId.ROLLING_SUM, rolling.rolling_sum_search, False, "rolling_sum"),
        AlgorithmInfo(AlgorithmId.ROLLING_XOR, rolling.rolling_xor_search, False, "rolling_xor"),
        AlgorithmInfo(AlgorithmId.KARP_RABIN, rolling.karp_rabin_search, True, "karp_rabin"),
        AlgorithmInfo(AlgorithmId.KMP, classical.kmp_search, False, "kmp"),
        AlgorithmInfo(AlgorithmId.BOYER_MOORE, classical.boyer_moore_search, True, "boyer_moore"),
        AlgorithmInfo(AlgorithmId.HORSPOOL, classical.horspool_search, True, "horspool"),
        AlgorithmInfo(AlgorithmId.SUNDAY_QUICK, classical.sunday_quick_search, True, "sunday_quick"),
    ]
}

CLI_TOKENS: dict[str, AlgorithmId] = {a.value: a for a in AlgorithmId}


def parse_algorithm(token: str) -> AlgorithmId:
    try:
        return CLI_TOKENS[token.lower()]
    except KeyError:
        raise ValueError(
            f"unknown algorithm {token!r}; choose from {', '.join(sorted(CLI_TOKENS))}"
        ) from None


def supports(algorithm: AlgorithmId, target: CodePointText, pattern: CodePointText) -> bool:
    """True when the input stays inside the algorithm's character set."""
    if ALGORITHMS[algorithm].ascii_only:
        return target.is_ascii() and pattern.is_ascii()
    return True


def dispatch(
    algorithm: AlgorithmId, target: CodePointText, pattern: CodePointText
) -> MatchResult:
    """Run the named algorithm; identical to calling its operation directly."""
    return ALGORITHMS[algorithm].search(target, pattern)
