"""
Dataclasses for the search algorithms.
"""

from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Optional

import numpy as np

from ranking.ranking import Permutation, format_ranking, parse_permutation
from shared.util_config import AppConfig, get_config
from shared.util_responses import render_fitness
from shared.util_rng import RNG_ALGORITHM


@dataclass
class SolverParams:
    """Search parameters for Borda, LADS and HER."""
    max_gens: int = 60          # generations without improvement before HER stops
    pop_size: int = 20          # T
    beta: float = 0.2           # randomized Borda drops a beta share of the rankings
    max_iters: int = 5000       # LADS idle-iteration cap
    history_len: int = 5        # L_h, length of the LADS cost list
    time_limit: float = 7200.0  # wall-clock seconds for one solve
    seed: int = 0
    trace_every: int = 0        # record a cost-drop trace point every k LADS iterations, 0 = off

    def validate(self) -> None:
        if self.max_gens < 1:
            raise ValueError(f"max_gens must be positive, got {self.max_gens}")
        if self.pop_size < 2:
            raise ValueError(f"pop_size must be at least 2, got {self.pop_size}")
        if not 0 < self.beta < 0.5:
            raise ValueError(f"beta must be in (0, 0.5), got {self.beta}")
        if self.max_iters < 1:
            raise ValueError(f"max_iters must be positive, got {self.max_iters}")
        if self.history_len < 1:
            raise ValueError(f"history_len must be positive, got {self.history_len}")
        if not self.time_limit > 0:
            raise ValueError(f"time_limit must be positive, got {self.time_limit}")
        if self.trace_every < 0:
            raise ValueError(f"trace_every must be non-negative, got {self.trace_every}")

    @classmethod
    def from_config(cls, config: Optional[AppConfig] = None, **overrides) -> 'SolverParams':
        """Defaults from the environment, then non-None overrides."""
        config = config or get_config()
        params = cls(
            max_gens=config.max_gens,
            pop_size=config.pop_size,
            beta=config.beta,
            max_iters=config.max_iters,
            history_len=config.history_len,
            time_limit=config.time_limit,
            seed=config.seed,
        )
        for key, value in overrides.items():
            if value is not None:
                setattr(params, key, value)
        return params

    @classmethod
    def from_dict(cls, data: dict) -> 'SolverParams':
        known = {k: v for k, v in data.items() if k in cls.__dataclass_fields__}
        return cls(**known)

    def to_dict(self) -> dict:
        return asdict(self)


class CostList:
    """
    Late-acceptance history: the last L_h fitness sums in a circular buffer,
    with their maximum and its multiplicity kept exact.
    """

    def __init__(self, length: int, initial: int):
        self.costs = [initial] * length
        self.f_max = initial
        self.count = length
        self.f_prev = initial

    def __len__(self) -> int:
        return len(self.costs)

    def accepts(self, current: int, candidate: int) -> bool:
        return candidate == current or candidate < self.f_max

    def update(self, slot: int, current: int) -> None:
        """Record the current fitness in the virtual-beginning slot."""
        old = self.costs[slot]
        if current > old:
            self.costs[slot] = current
            if current > self.f_max:
                self.f_max, self.count = current, 1
            elif current == self.f_max:
                self.count += 1
        elif current < old and current < self.f_prev:
            if old == self.f_max:
                self.count -= 1
            self.costs[slot] = current
            if self.count == 0:
                self.f_max = max(self.costs)
                self.count = self.costs.count(self.f_max)

    def consistent(self) -> bool:
        top = max(self.costs)
        return self.f_max == top and self.count == self.costs.count(top)


@dataclass
class Member:
    permutation: Permutation
    fitness_sum: int
    born: int = 0   # insertion sequence number


class Population:
    """Pairwise-distinct solutions with cached fitness sums."""

    def __init__(self):
        self.members: list[Member] = []
        self._seen: set[tuple[int, ...]] = set()
        self._born = 0

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, p: Permutation) -> bool:
        return p.order in self._seen

    def add(self, p: Permutation, fitness_sum: int) -> bool:
        if p in self:
            return False
        self.members.append(Member(p, fitness_sum, self._born))
        self._seen.add(p.order)
        self._born += 1
        return True

    def replace(self, index: int, p: Permutation, fitness_sum: int) -> None:
        self._seen.discard(self.members[index].permutation.order)
        self.members[index] = Member(p, fitness_sum, self._born)
        self._seen.add(p.order)
        self._born += 1

    def worst_index(self) -> int:
        """Highest fitness sum; the oldest member among equally bad ones."""
        return max(range(len(self.members)), key=lambda i: (self.members[i].fitness_sum, -self.members[i].born))

    def best(self) -> Member:
        return min(self.members, key=lambda member: (member.fitness_sum, member.born))

    def pick_parents(self, rng: np.random.Generator) -> tuple[Member, Member]:
        i, j = rng.choice(len(self.members), size=2, replace=False)
        return self.members[int(i)], self.members[int(j)]


@dataclass
class SearchCounters:
    iterations: int = 0
    evaluations: int = 0
    generations: int = 0

    def absorb(self, result: 'SolverResult') -> None:
        self.iterations += result.iterations
        self.evaluations += result.evaluations


@dataclass
class SolverResult:
    """Best solution of one run plus its counters."""
    algorithm: str
    best: Permutation
    fitness_sum: int
    n: int
    iterations: int = 0
    evaluations: int = 0
    generations: int = 0
    elapsed_ms: int = 0
    time_to_best_ms: int = 0
    seed: int = 0
    params: SolverParams = field(default_factory=SolverParams)
    trace: list[tuple[int, int, int]] = field(default_factory=list)

    @property
    def fitness_value(self) -> Fraction:
        return Fraction(self.fitness_sum, self.n)

    @property
    def fitness(self) -> str:
        """sum / n with 3 decimals."""
        return render_fitness(self.fitness_sum, self.n)

    def to_dict(self, instance: str | None = None) -> dict:
        return {
            "algorithm": self.algorithm,
            "instance": instance,
            "m": self.best.m,
            "n": self.n,
            "seed": self.seed,
            "rng": RNG_ALGORITHM,
            "params": self.params.to_dict(),
            "best_ranking": format_ranking(self.best),
            "fitness_sum": self.fitness_sum,
            "fitness": self.fitness,
            "iterations": self.iterations,
            "evaluations": self.evaluations,
            "generations": self.generations,
            "elapsed_ms": self.elapsed_ms,
            "time_to_best_ms": self.time_to_best_ms,
        }

    @classmethod
    def from_dict(cls, data: dict) -> 'SolverResult':
        """Convert a to_dict() payload back to a SolverResult (trace is not serialized)."""
        return cls(
            algorithm=data.get("algorithm", "unknown"),
            best=parse_permutation(data["best_ranking"], data["m"]),
            fitness_sum=data["fitness_sum"],
            n=data["n"],
            iterations=data.get("iterations", 0),
            evaluations=data.get("evaluations", 0),
            generations=data.get("generations", 0),
            elapsed_ms=data.get("elapsed_ms", 0),
            time_to_best_ms=data.get("time_to_best_ms", 0),
            seed=data.get("seed", 0),
            params=SolverParams.from_dict(data["params"]) if data.get("params") else SolverParams(),
        )
