"""
Population initialization and updating for the hybrid evolutionary search.
"""

import logging
import math
import time
from typing import Optional

import numpy as np

from ranking.ranking import Dataset, Permutation
from ranking.utility.util_distance import fitness_sum
from solver.utility.util_borda import randomized_borda
from solver.utility.util_classes import Population, SearchCounters, SolverParams
from solver.utility.util_lads import lads

# exhaustive distinctness is only checked for universes this small
_SMALL_UNIVERSE = 12


def population_capacity(m: int, pop_size: int) -> int:
    """pop_size, capped by m! for tiny universes."""
    if m <= _SMALL_UNIVERSE:
        return min(pop_size, math.factorial(m))
    return pop_size


def population_init(
    d: Dataset,
    params: SolverParams,
    rng: np.random.Generator,
    *,
    counters: Optional[SearchCounters] = None,
    deadline: Optional[float] = None,
    clock_start: Optional[float] = None,
) -> Population:
    """
    Randomized-Borda candidates improved by LADS, kept when distinct.

    After 10 * T attempts the remaining slots are filled with LADS-improved
    random permutations (or the random permutation itself when LADS lands on
    an existing member).
    """
    clock_start = time.perf_counter() if clock_start is None else clock_start
    deadline = clock_start + params.time_limit if deadline is None else deadline
    counters = counters if counters is not None else SearchCounters()

    target = population_capacity(d.m, params.pop_size)
    if target < params.pop_size:
        logging.warning(f"Only {target} distinct permutations of {d.m} labels: population capped at {target}")

    pop = Population()
    attempts = 0
    while len(pop) < target and attempts < 10 * params.pop_size:
        if pop and time.perf_counter() >= deadline:
            break
        attempts += 1
        candidate = randomized_borda(d, params.beta, rng)
        improved = lads(candidate, d, params, rng, deadline=deadline, clock_start=clock_start)
        counters.absorb(improved)
        pop.add(improved.best, improved.fitness_sum)

    fills = 0
    while len(pop) < target and fills < 10 * params.pop_size:
        if time.perf_counter() >= deadline:
            break
        fills += 1
        candidate = Permutation(tuple(int(x) for x in rng.permutation(d.m) + 1))
        improved = lads(candidate, d, params, rng, deadline=deadline, clock_start=clock_start)
        counters.absorb(improved)
        if not pop.add(improved.best, improved.fitness_sum) and candidate not in pop:
            pop.add(candidate, fitness_sum(candidate, d))

    if len(pop) < target:
        logging.warning(f"Population initialized with {len(pop)} of {target} members")
    logging.info(f"Population initialized: size={len(pop)}, best_sum={pop.best().fitness_sum}")
    return pop


def population_update(pop: Population, child: Permutation, child_sum: int) -> bool:
    """Replace the worst member by a strictly better, distinct child; True if replaced."""
    if child in pop:
        return False
    worst = pop.worst_index()
    if child_sum >= pop.members[worst].fitness_sum:
        return False
    pop.replace(worst, child, child_sum)
    return True
