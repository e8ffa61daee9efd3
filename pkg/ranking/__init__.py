"""
Ranking layer - data model, text syntax and Kendall-type distances.
"""

from ranking.ranking import (
    UNRANKED,
    Dataset,
    Permutation,
    PreferencePair,
    Ranking,
    RankingError,
    RankingParseError,
    as_ranking,
    format_ranking,
    parse_permutation,
    parse_ranking,
)
from ranking.utility.util_distance import (
    concordant_pairs,
    count_inversions,
    decompose_pairs,
    extended_kendall,
    extended_kendall_rankings,
    fitness,
    fitness_sum,
    kendall_distance,
)

__all__ = [
    "UNRANKED",
    "Dataset",
    "Permutation",
    "PreferencePair",
    "Ranking",
    "RankingError",
    "RankingParseError",
    "as_ranking",
    "format_ranking",
    "parse_permutation",
    "parse_ranking",
    "concordant_pairs",
    "count_inversions",
    "decompose_pairs",
    "extended_kendall",
    "extended_kendall_rankings",
    "fitness",
    "fitness_sum",
    "kendall_distance",
]
