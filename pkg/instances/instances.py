"""
Benchmark instances: Mallows datasets, partial rankings and dataset files.

Dataset file format (UTF-8):
    # m=4 n=2            optional header, first line only
    # any other comment  '#'-prefixed lines are ignored
    1|4|3|2              one ranking per line, ranking syntax
    1|3,4|2
Blank lines are ignored. Without a header, m is the largest label seen.

The alternate "ranks" syntax holds one complete ranking per line as m
integers (whitespace or comma separated), the k-th being the rank of label k.
"""

import logging
import re
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Literal

import numpy as np

from instances.utility.util_mallows import MallowsParams, sample_mallows
from ranking.ranking import (
    Dataset,
    Permutation,
    Ranking,
    RankingError,
    format_ranking,
    parse_ranking,
)
from shared.util_rng import make_rng

Syntax = Literal["ranking", "ranks"]

MAX_REDRAWS = 1000

_HEADER = re.compile(r"#\s*m\s*=\s*(\d+)\s+n\s*=\s*(\d+)\s*")
_RANK_SEPARATOR = re.compile(r"[\s,]+")


class DatasetFormatError(ValueError):
    """Malformed dataset file; line_no is 1-based (0 when not tied to a line)."""

    def __init__(self, message: str, line_no: int = 0, line: str = ""):
        self.line_no = line_no
        self.line = line
        prefix = f"line {line_no}: " if line_no else ""
        super().__init__(f"{prefix}{message}")


class GenerationError(RuntimeError):
    """Random generation gave up after too many redraws."""


@dataclass(frozen=True)
class PartializeParams:
    """Probabilities for turning a permutation into a partial ranking with ties."""
    p_discard: float = 2 / 3
    p_keep: float = 5 / 6

    def validate(self) -> None:
        if not 0 <= self.p_discard < 1:
            raise ValueError(f"p_discard must be in [0, 1), got {self.p_discard}")
        if not 0 <= self.p_keep <= 1:
            raise ValueError(f"p_keep must be in [0, 1], got {self.p_keep}")


def instance_name(m: int, theta: float, idx: int) -> str:
    """Benchmark-style instance name, e.g. MM100n0.200_05."""
    return f"MM{m}n{theta:.3f}_{idx:02d}"


def generate_dataset(params: MallowsParams, seed: int) -> Dataset:
    """n independent Mallows draws, reproducible from seed."""
    params.validate()
    rng = make_rng(seed)
    draws = [sample_mallows(params, rng) for _ in range(params.n)]
    return Dataset.from_permutations(draws)


def partialize(p: Permutation, params: PartializeParams, rng: np.random.Generator) -> Ranking:
    """
    Drop and tie labels of p at random without ever inverting its order.

    Labels are visited from most to least preferred. Each is discarded with
    probability p_discard; a retained label joins the last bucket with
    probability p_keep, otherwise opens a new bucket. Draws keeping fewer than
    two labels are repeated.
    """
    params.validate()
    for attempt in range(1, MAX_REDRAWS + 1):
        buckets: list[list[int]] = []
        for label in p.order:
            if rng.random() < params.p_discard:
                continue
            if buckets and rng.random() < params.p_keep:
                buckets[-1].append(label)
            else:
                buckets.append([label])
        if sum(len(b) for b in buckets) >= 2:
            if attempt > 1:
                logging.debug(f"partialize: valid draw after {attempt} attempts")
            return Ranking.from_buckets(p.m, buckets)

    raise GenerationError(
        f"partialize: fewer than 2 labels kept in {MAX_REDRAWS} draws (p_discard={params.p_discard})"
    )


def partialize_dataset(d: Dataset, params: PartializeParams, seed: int) -> Dataset:
    if not d.complete_flag:
        raise ValueError("partialize needs a dataset of complete rankings")
    rng = make_rng(seed)
    return Dataset(m=d.m, rankings=tuple(partialize(r.as_permutation(), params, rng) for r in d.rankings))


# =============================================================================
# FILE I/O
# =============================================================================

def read_dataset(path: str | Path, syntax: Syntax = "ranking") -> Dataset:
    """Read a dataset file; errors carry the 1-based line number."""
    lines = Path(path).read_text(encoding="utf-8").splitlines()

    header_m = header_n = None
    body: list[tuple[int, str]] = []
    for line_no, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            match = _HEADER.fullmatch(line)
            if match and not body and header_m is None:
                header_m, header_n = int(match.group(1)), int(match.group(2))
            continue
        body.append((line_no, line))

    if not body:
        raise DatasetFormatError(f"no rankings in {path}")

    if syntax == "ranks":
        rankings = _parse_rank_lines(body, header_m)
    elif syntax == "ranking":
        rankings = _parse_ranking_lines(body, header_m)
    else:
        raise ValueError(f"unknown dataset syntax: {syntax}")

    m = rankings[0].m
    if header_n is not None and header_n != len(rankings):
        raise DatasetFormatError(f"header declares n={header_n} but {len(rankings)} rankings were read")

    logging.info(f"Read dataset {path}: m={m}, n={len(rankings)}")
    return Dataset(m=m, rankings=tuple(rankings))


def _parse_ranking_lines(body: list[tuple[int, str]], header_m: int | None) -> list[Ranking]:
    # without a header, parse against an unbounded universe and shrink afterwards
    universe = header_m if header_m is not None else sys.maxsize
    parsed = []
    for line_no, line in body:
        try:
            parsed.append(parse_ranking(line, universe))
        except RankingError as e:
            raise DatasetFormatError(str(e), line_no, line) from e

    if header_m is not None:
        return parsed
    m = max(max(max(b) for b in r.buckets) for r in parsed)
    return [Ranking(m=m, buckets=r.buckets) for r in parsed]


def _parse_rank_lines(body: list[tuple[int, str]], header_m: int | None) -> list[Ranking]:
    rankings = []
    m = header_m
    for line_no, line in body:
        tokens = [t for t in _RANK_SEPARATOR.split(line) if t]
        try:
            ranks = [int(t) for t in tokens]
        except ValueError as e:
            raise DatasetFormatError(f"non-integer rank in '{line}'", line_no, line) from e
        if m is None:
            m = len(ranks)
        if len(ranks) != m:
            raise DatasetFormatError(f"expected {m} ranks, got {len(ranks)}", line_no, line)
        try:
            rankings.append(Permutation.from_ranks(ranks).to_ranking())
        except RankingError as e:
            raise DatasetFormatError(str(e), line_no, line) from e
    return rankings


def write_dataset(d: Dataset, path: str | Path, comments: Iterable[str] = ()) -> None:
    """Write d with an "# m= n=" header; comment lines follow the header."""
    out = [f"# m={d.m} n={d.n}"]
    out.extend(f"# {c}" for c in comments)
    out.extend(format_ranking(r) for r in d.rankings)
    path = Path(path)
    path.write_text("\n".join(out) + "\n", encoding="utf-8")
    logging.info(f"Wrote dataset {path}: m={d.m}, n={d.n}")
