"""
Borda count baselines.

Complete datasets: the label at rank r of a ranking scores m - r points.
Partial datasets (extended Borda): a missing label scores (m + 1) / 2, a label
at rank r among the m' ranked ones scores (m' + 1 - r)(m + 1) / (m' + 1).
Tied labels take the mean of the positions their bucket spans. Labels are
sorted by descending total score, equal scores in uniformly random order.

Scores are exact: each ranking contributes integer numerators over 2(m' + 1),
rankings sharing m' are summed in numpy and the groups are combined over a
common denominator, so equal totals always compare equal.
"""

import math
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from ranking.ranking import Dataset, Permutation, Ranking


def ranking_points(r: Ranking, extended: bool) -> tuple[np.ndarray, int]:
    """
    Points awarded by one ranking as (numerators, denominator): label k
    scores numerators[k] / (2 * denominator). Index 0 is unused.
    """
    m = r.m
    ranked = r.ranked_count
    denominator = ranked + 1 if extended else 1
    numerators = np.full(m + 1, (m + 1) * denominator if extended else 0, dtype=np.int64)
    start = 0
    for bucket in r.buckets:
        twice_mid_rank = 2 * start + len(bucket) + 1
        if extended:
            value = (2 * (ranked + 1) - twice_mid_rank) * (m + 1)
        else:
            value = 2 * m - twice_mid_rank
        numerators[list(bucket)] = value
        start += len(bucket)
    numerators[0] = 0
    return numerators, denominator


def borda_scores(d: Dataset, indices: Optional[Sequence[int]] = None) -> np.ndarray:
    """Exact total score per label over the selected rankings (all by default), as Fractions."""
    extended = not d.complete_flag
    selected = range(d.n) if indices is None else indices
    groups: dict[int, np.ndarray] = {}
    for k in selected:
        numerators, denominator = ranking_points(d.rankings[k], extended)
        if denominator in groups:
            groups[denominator] += numerators
        else:
            groups[denominator] = numerators

    common = math.lcm(*groups) if groups else 1
    totals = [0] * (d.m + 1)
    for denominator, numerators in groups.items():
        factor = common // denominator
        for label, value in enumerate(numerators.tolist()):
            totals[label] += value * factor
    return np.array([Fraction(total, 2 * common) for total in totals], dtype=object)


def order_by_scores(scores: Sequence, rng: np.random.Generator) -> Permutation:
    """Labels by descending score (index 0 unused); equal scores in uniformly random order."""
    m = len(scores) - 1
    noise = rng.random(m)
    order = sorted(range(1, m + 1), key=lambda label: (-scores[label], noise[label - 1]))
    return Permutation(tuple(order))


def borda(d: Dataset, rng: np.random.Generator) -> Permutation:
    return order_by_scores(borda_scores(d), rng)


def randomized_borda(d: Dataset, beta: float, rng: np.random.Generator) -> Permutation:
    """Borda over ceil((1 - beta) * n) rankings drawn without replacement."""
    if not 0 < beta < 0.5:
        raise ValueError(f"beta must be in (0, 0.5), got {beta}")
    size = math.ceil(round((1 - beta) * d.n, 9))
    if size < 1:
        raise ValueError(f"randomized Borda subset is empty (n={d.n}, beta={beta})")
    subset = rng.choice(d.n, size=size, replace=False)
    return order_by_scores(borda_scores(d, [int(k) for k in subset]), rng)
