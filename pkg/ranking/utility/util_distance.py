"""
Kendall-type distances and the aggregation objective.

- kendall_distance: pairs ordered oppositely by two permutations, counted as
  inversions with a merge sort in O(m log m).
- extended_kendall: the same count against an arbitrary ranking; pairs with
  a missing label or tied in the ranking contribute nothing.
- fitness_sum / fitness: summed (resp. mean) extended distance to a dataset.
  The integer sum is what the solvers compare; the mean is for reporting.
"""

from fractions import Fraction
from typing import Sequence

from ranking.ranking import (
    UNRANKED,
    Dataset,
    Permutation,
    PreferencePair,
    Ranking,
    as_ranking,
)


def _check_universe(m_left: int, m_right: int) -> None:
    if m_left != m_right:
        raise ValueError(f"universe size mismatch: {m_left} vs {m_right}")


def count_inversions(values: Sequence[int]) -> int:
    """Pairs i < j with values[i] > values[j]; equal values are not inversions."""
    items = list(values)
    buffer = [0] * len(items)
    return _sort_count(items, buffer, 0, len(items))


def _sort_count(items: list[int], buffer: list[int], lo: int, hi: int) -> int:
    if hi - lo < 2:
        return 0
    mid = (lo + hi) // 2
    count = _sort_count(items, buffer, lo, mid) + _sort_count(items, buffer, mid, hi)

    i, j, k = lo, mid, lo
    while i < mid and j < hi:
        if items[i] <= items[j]:
            buffer[k] = items[i]
            i += 1
        else:
            buffer[k] = items[j]
            j += 1
            count += mid - i
        k += 1
    tail = items[i:mid] + items[j:hi]
    buffer[k:hi] = tail
    items[lo:hi] = buffer[lo:hi]
    return count


def kendall_distance(u: Permutation, v: Permutation) -> int:
    """Number of label pairs ordered differently by u and v."""
    _check_universe(u.m, v.m)
    rank_in_v = v.rank_of
    return count_inversions([rank_in_v[label] for label in u.order])


def extended_kendall(u: Permutation, s: Ranking | Permutation) -> int:
    """Pairs strictly ordered by s, both ranked, in the opposite order to u."""
    s = as_ranking(s)
    _check_universe(u.m, s.m)
    bucket_of = s.bucket_of
    return count_inversions([bucket_of[label] for label in u.order if bucket_of[label] != UNRANKED])


def extended_kendall_rankings(a: Ranking | Permutation, b: Ranking | Permutation) -> int:
    """
    Pairwise O(m^2) disagreement count between two arbitrary rankings.

    A pair counts only if both labels are ranked in both rankings and the two
    strict preferences are opposite; a tie on either side counts 0.
    """
    a, b = as_ranking(a), as_ranking(b)
    _check_universe(a.m, b.m)
    ba, bb = a.bucket_of, b.bucket_of
    common = [label for label in range(1, a.m + 1) if ba[label] != UNRANKED and bb[label] != UNRANKED]

    count = 0
    for i, x in enumerate(common):
        for y in common[i + 1:]:
            da = ba[x] - ba[y]
            db = bb[x] - bb[y]
            if (da < 0 < db) or (db < 0 < da):
                count += 1
    return count


def fitness_sum(p: Permutation, d: Dataset) -> int:
    """Sum over the dataset of extended_kendall(p, ranking)."""
    _check_universe(p.m, d.m)
    return sum(extended_kendall(p, ranking) for ranking in d.rankings)


def fitness(p: Permutation, d: Dataset) -> Fraction:
    """Mean extended Kendall distance from p to the dataset, exact."""
    return Fraction(fitness_sum(p, d), d.n)


def decompose_pairs(r: Ranking | Permutation) -> frozenset[PreferencePair]:
    """All strict preferences stated by r."""
    if isinstance(r, Permutation):
        order = r.order
        return frozenset(
            PreferencePair(order[i], order[j])
            for i in range(len(order))
            for j in range(i + 1, len(order))
        )
    pairs = set()
    for i, bucket in enumerate(r.buckets):
        for later in r.buckets[i + 1:]:
            pairs.update(PreferencePair(a, b) for a in bucket for b in later)
    return frozenset(pairs)


def concordant_pairs(u: Permutation, v: Permutation) -> frozenset[PreferencePair]:
    """Preferences shared by u and v; a strict partial order."""
    _check_universe(u.m, v.m)
    return decompose_pairs(u) & decompose_pairs(v)
