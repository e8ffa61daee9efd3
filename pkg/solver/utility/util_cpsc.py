"""
Concordant pairs-based semantic crossover (CPSC).

The offspring keeps every preference the two parents agree on. Each label is
scored by the number of labels it precedes in both parents (its out-degree
in the concordant relation); labels are ordered by descending score and
labels with equal scores are shuffled. Scores strictly decrease along every
concordant pair, so the offspring is a linear extension of that relation.
"""

import numpy as np

from ranking.ranking import Permutation


def concordance_matrix(u: Permutation, v: Permutation) -> np.ndarray:
    """before[i, j] is True iff label i + 1 precedes label j + 1 in both parents."""
    if u.m != v.m:
        raise ValueError(f"universe size mismatch: {u.m} vs {v.m}")
    ru = np.array(u.rank_of[1:])
    rv = np.array(v.rank_of[1:])
    return (ru[:, None] < ru[None, :]) & (rv[:, None] < rv[None, :])


def cpsc(u: Permutation, v: Permutation, rng: np.random.Generator) -> Permutation:
    out_degree = concordance_matrix(u, v).sum(axis=1)
    order = np.lexsort((rng.random(u.m), -out_degree)) + 1
    return Permutation(tuple(int(label) for label in order))
