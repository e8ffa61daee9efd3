"""
Ranking data model and text syntax.

Labels are 1-based integers over a universe of m labels. A Ranking is an
ordered list of buckets (sets of tied labels), most preferred first; labels
missing from every bucket are unranked. A Permutation is the complete strict
case: m singleton buckets.

Text syntax: buckets joined by '|', labels inside a bucket joined by ','.
    "1|3,4|2"  ->  1 first, then 3 and 4 tied, then 2
"""

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

import numpy as np

UNRANKED = -1

_LABEL_TOKEN = re.compile(r"[0-9]+")


class RankingError(ValueError):
    """A ranking, permutation or dataset violates its invariants."""


class RankingParseError(RankingError):
    """Ranking text could not be parsed."""


class PreferencePair(NamedTuple):
    """preferred is ranked strictly before other."""
    preferred: int
    other: int


@dataclass(frozen=True)
class Ranking:
    """Bucket order over a subset of the labels 1..m."""
    m: int
    buckets: tuple[frozenset[int], ...]

    def __post_init__(self):
        seen: set[int] = set()
        for bucket in self.buckets:
            if not bucket:
                raise RankingError("empty bucket")
            for label in bucket:
                if not 1 <= label <= self.m:
                    raise RankingError(f"label {label} outside 1..{self.m}")
                if label in seen:
                    raise RankingError(f"duplicate label {label}")
                seen.add(label)
        if len(seen) < 2:
            raise RankingError(f"a ranking needs at least 2 ranked labels, got {len(seen)}")

    @classmethod
    def from_buckets(cls, m: int, buckets: Iterable[Iterable[int]]) -> "Ranking":
        return cls(m=m, buckets=tuple(frozenset(b) for b in buckets))

    @cached_property
    def bucket_of(self) -> tuple[int, ...]:
        """bucket_of[label] = 0-based bucket index, UNRANKED if missing. Index 0 is unused."""
        table = [UNRANKED] * (self.m + 1)
        for index, bucket in enumerate(self.buckets):
            for label in bucket:
                table[label] = index
        return tuple(table)

    @property
    def ranked_count(self) -> int:
        return sum(len(b) for b in self.buckets)

    @property
    def is_permutation(self) -> bool:
        return len(self.buckets) == self.m and all(len(b) == 1 for b in self.buckets)

    def as_permutation(self) -> "Permutation":
        if not self.is_permutation:
            raise RankingError(f"'{format_ranking(self)}' is not a permutation of {self.m} labels")
        return Permutation(tuple(next(iter(b)) for b in self.buckets))

    def __str__(self) -> str:
        return format_ranking(self)


@dataclass(frozen=True)
class Permutation:
    """Complete strict ranking: order[k] is the label at 0-based position k."""
    order: tuple[int, ...]

    def __post_init__(self):
        m = len(self.order)
        if m < 2:
            raise RankingError(f"a permutation needs at least 2 labels, got {m}")
        if sorted(self.order) != list(range(1, m + 1)):
            raise RankingError(f"{self.order} is not a permutation of 1..{m}")

    @classmethod
    def identity(cls, m: int) -> "Permutation":
        return cls(tuple(range(1, m + 1)))

    @classmethod
    def from_ranks(cls, ranks: Sequence[int]) -> "Permutation":
        """ranks[k] is the 1-based rank of label k + 1."""
        m = len(ranks)
        if sorted(ranks) != list(range(1, m + 1)):
            raise RankingError(f"{list(ranks)} is not a permutation of ranks 1..{m}")
        order = [0] * m
        for label, rank in enumerate(ranks, start=1):
            order[rank - 1] = label
        return cls(tuple(order))

    @property
    def m(self) -> int:
        return len(self.order)

    @cached_property
    def rank_of(self) -> tuple[int, ...]:
        """rank_of[label] = 1-based position. Index 0 is unused."""
        table = [0] * (self.m + 1)
        for position, label in enumerate(self.order, start=1):
            table[label] = position
        return tuple(table)

    def to_ranking(self) -> Ranking:
        return Ranking(m=self.m, buckets=tuple(frozenset((label,)) for label in self.order))

    def swapped(self, a: int, b: int) -> "Permutation":
        """Copy with labels a and b exchanging positions."""
        order = list(self.order)
        i, j = self.rank_of[a] - 1, self.rank_of[b] - 1
        order[i], order[j] = order[j], order[i]
        return Permutation(tuple(order))

    def __str__(self) -> str:
        return format_ranking(self)


@dataclass(frozen=True)
class Dataset:
    """n rankings over the common label universe 1..m."""
    m: int
    rankings: tuple[Ranking, ...]

    def __post_init__(self):
        if not self.rankings:
            raise RankingError("a dataset needs at least one ranking")
        for k, ranking in enumerate(self.rankings):
            if ranking.m != self.m:
                raise RankingError(f"ranking {k + 1} is over {ranking.m} labels, dataset over {self.m}")

    @classmethod
    def from_permutations(cls, permutations: Sequence[Permutation]) -> "Dataset":
        if not permutations:
            raise RankingError("a dataset needs at least one ranking")
        return cls(m=permutations[0].m, rankings=tuple(p.to_ranking() for p in permutations))

    @property
    def n(self) -> int:
        return len(self.rankings)

    @cached_property
    def complete_flag(self) -> bool:
        return all(r.is_permutation for r in self.rankings)

    @cached_property
    def bucket_table(self) -> np.ndarray:
        """(n, m + 1) bucket indices, UNRANKED where a label is missing; column 0 unused."""
        table = np.array([r.bucket_of for r in self.rankings], dtype=np.int32)
        table.setflags(write=False)
        return table

    @cached_property
    def ranked_mask(self) -> np.ndarray:
        mask = self.bucket_table != UNRANKED
        mask.setflags(write=False)
        return mask

    def subset(self, indices: Iterable[int]) -> "Dataset":
        return Dataset(m=self.m, rankings=tuple(self.rankings[i] for i in indices))


def parse_ranking(text: str, m: int) -> Ranking:
    """Parse "1|3,4|2" style text into a Ranking over 1..m."""
    body = text.strip()
    if not body:
        raise RankingParseError("empty ranking text")

    buckets: list[frozenset[int]] = []
    seen: set[int] = set()
    for part in body.split("|"):
        if not part:
            raise RankingParseError(f"empty bucket in '{body}'")
        bucket = []
        for token in part.split(","):
            if not _LABEL_TOKEN.fullmatch(token):
                raise RankingParseError(f"label '{token}' is not an integer in '{body}'")
            label = int(token)
            if not 1 <= label <= m:
                raise RankingParseError(f"label {label} outside 1..{m} in '{body}'")
            if label in seen:
                raise RankingParseError(f"duplicate label {label} in '{body}'")
            seen.add(label)
            bucket.append(label)
        buckets.append(frozenset(bucket))

    if len(seen) < 2:
        raise RankingParseError(f"'{body}' ranks fewer than 2 labels")
    return Ranking(m=m, buckets=tuple(buckets))


def parse_permutation(text: str, m: int) -> Permutation:
    try:
        return parse_ranking(text, m).as_permutation()
    except RankingParseError:
        raise
    except RankingError as e:
        raise RankingParseError(str(e)) from e


def format_ranking(r: Ranking | Permutation) -> str:
    """Inverse of parse_ranking; labels inside a bucket in ascending order."""
    if isinstance(r, Permutation):
        return "|".join(str(label) for label in r.order)
    return "|".join(",".join(str(label) for label in sorted(bucket)) for bucket in r.buckets)


def as_ranking(r: Ranking | Permutation) -> Ranking:
    return r.to_ranking() if isinstance(r, Permutation) else r
