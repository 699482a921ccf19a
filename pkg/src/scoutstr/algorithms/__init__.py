from ._shared import MatchResult, SlideEvent
from .classical import (
    BadCharTable,
    BadCharVariant,
    boyer_moore_search,
    brute_force_search,
    compute_bad_char_table,
    horspool_search,
    kmp_search,
    sunday_quick_search,
)
from .registry import (
    ALGORITHMS,
    AlgorithmId,
    AlgorithmInfo,
    CLI_TOKENS,
    dispatch,
    parse_algorithm,
    supports,
)
from .rolling import karp_rabin_search, rolling_sum_search, rolling_xor_search
from .scout import (
    TwinTable,
    compute_twin_table,
    scout_search,
    scout_simple_search,
    scout_sunday_search,
    scout_twin_search,
    scout_variant_search,
)

__all__ = [
    "ALGORITHMS",
    "AlgorithmId",
    "AlgorithmInfo",
    "BadCharTable",
    "BadCharVariant",
    "CLI_TOKENS",
    "MatchResult",
    "SlideEvent",
    "TwinTable",
    "boyer_moore_search",
    "brute_force_search",
    "compute_bad_char_table",
    "compute_twin_table",
    "dispatch",
    "horspool_search",
    "karp_rabin_search",
    "kmp_search",
    "parse_algorithm",
    "rolling_sum_search",
    "rolling_xor_search",
    "scout_search",
    "scout_simple_search",
    "scout_sunday_search",
    "scout_twin_search",
    "scout_variant_search",
    "sunday_quick_search",
    "supports",
]
