"""Shared builders and hypothesis strategies for the test suite."""

import itertools

import numpy as np
from hypothesis import strategies as st

from ranking.ranking import Dataset, Permutation, Ranking
from ranking.utility.util_distance import fitness_sum


def random_permutation(m: int, rng: np.random.Generator) -> Permutation:
    return Permutation(tuple(int(x) for x in rng.permutation(m) + 1))


def random_ranking(m: int, rng: np.random.Generator, p_drop: float = 0.3, p_tie: float = 0.4) -> Ranking:
    """Random ranking with missing and tied labels, at least 2 ranked."""
    while True:
        buckets: list[list[int]] = []
        for label in rng.permutation(m) + 1:
            if rng.random() < p_drop:
                continue
            if buckets and rng.random() < p_tie:
                buckets[-1].append(int(label))
            else:
                buckets.append([int(label)])
        if sum(len(b) for b in buckets) >= 2:
            return Ranking.from_buckets(m, buckets)


def random_dataset(m: int, n: int, seed: int, partial: bool = False) -> Dataset:
    rng = np.random.default_rng(seed)
    if partial:
        return Dataset(m=m, rankings=tuple(random_ranking(m, rng) for _ in range(n)))
    return Dataset.from_permutations([random_permutation(m, rng) for _ in range(n)])


def unanimous_dataset(order: tuple[int, ...], n: int = 5) -> Dataset:
    return Dataset.from_permutations([Permutation(order)] * n)


def optimum_sum(d: Dataset) -> int:
    """Exhaustive minimum fitness sum; only for small m."""
    return min(
        fitness_sum(Permutation(order), d)
        for order in itertools.permutations(range(1, d.m + 1))
    )


def permutations_of(m: int):
    return st.permutations(list(range(1, m + 1))).map(lambda order: Permutation(tuple(order)))


permutations = st.integers(min_value=2, max_value=9).flatmap(permutations_of)

permutation_pairs = st.integers(min_value=2, max_value=9).flatmap(
    lambda m: st.tuples(permutations_of(m), permutations_of(m))
)


@st.composite
def rankings_of(draw, m: int) -> Ranking:
    order = draw(st.permutations(list(range(1, m + 1))))
    keep = draw(st.lists(st.booleans(), min_size=m, max_size=m))
    kept = [label for label, k in zip(order, keep) if k]
    if len(kept) < 2:
        kept = list(order[:2])
    cuts = draw(st.lists(st.booleans(), min_size=len(kept) - 1, max_size=len(kept) - 1))
    buckets = [[kept[0]]]
    for label, cut in zip(kept[1:], cuts):
        if cut:
            buckets.append([label])
        else:
            buckets[-1].append(label)
    return Ranking.from_buckets(m, buckets)


permutation_and_ranking = st.integers(min_value=2, max_value=9).flatmap(
    lambda m: st.tuples(permutations_of(m), rankings_of(m))
)
