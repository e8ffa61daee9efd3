"""
Mallows model sampler.

P(pi) is proportional to exp(-theta * d(pi, center)), d the Kendall distance.
Draws use repeated insertion: the items of the center are inserted one by one
in preference order, the i-th item going to slot j (1-based, from the front)
with probability proportional to exp(-theta * (i - j)). This samples the
model exactly in O(m^2).
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from ranking.ranking import Permutation


@dataclass(frozen=True)
class MallowsParams:
    """Mallows model and sample size for one generated dataset."""
    m: int
    theta: float
    n: int = 100
    center: Optional[Permutation] = None   # identity when None

    @property
    def center_permutation(self) -> Permutation:
        return self.center if self.center is not None else Permutation.identity(self.m)

    def validate(self) -> None:
        # theta = 0 is the uniform limit; only the generator command insists on theta > 0
        if self.m < 2:
            raise ValueError(f"m must be at least 2, got {self.m}")
        if not self.theta >= 0:
            raise ValueError(f"theta must be non-negative, got {self.theta}")
        if self.n < 1:
            raise ValueError(f"n must be at least 1, got {self.n}")
        if self.center is not None and self.center.m != self.m:
            raise ValueError(f"center is over {self.center.m} labels, expected {self.m}")


def insertion_slot(i: int, theta: float, rng: np.random.Generator) -> int:
    """0-based insertion slot for the i-th item (1-based) among i slots."""
    # weights exp(-theta * (i - j)) for j = 1..i, i.e. the last slot has weight 1
    weights = np.exp(-theta * np.arange(i - 1, -1, -1, dtype=np.float64))
    cdf = np.cumsum(weights)
    slot = int(np.searchsorted(cdf, rng.random() * cdf[-1], side="right"))
    return min(slot, i - 1)


def sample_mallows(params: MallowsParams, rng: np.random.Generator) -> Permutation:
    """One draw from the Mallows model."""
    params.validate()
    drawn: list[int] = []
    for i, item in enumerate(params.center_permutation.order, start=1):
        drawn.insert(insertion_slot(i, params.theta, rng), item)
    return Permutation(tuple(drawn))
