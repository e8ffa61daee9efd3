"""
Solver layer - hybrid evolutionary ranking (HER) and the algorithm registry.

Structure:
- solver.py                       -> HER driver + ALGORITHMS registry (this file)
- utility/util_classes.py         -> SolverParams, CostList, Population, SolverResult
- utility/util_borda.py           -> Borda and randomized Borda
- utility/util_delta.py           -> incremental swap evaluation
- utility/util_lads.py            -> late acceptance driven search
- utility/util_cpsc.py            -> concordant pairs crossover
- utility/util_population.py      -> population initialization and updating
"""

import logging
import time
from typing import Callable, Optional

import numpy as np

from ranking.ranking import Dataset
from ranking.utility.util_distance import fitness_sum
from shared.util_rng import make_rng
from solver.utility.util_borda import borda
from solver.utility.util_classes import SearchCounters, SolverParams, SolverResult
from solver.utility.util_cpsc import cpsc
from solver.utility.util_lads import lads
from solver.utility.util_population import population_init, population_update


def _elapsed_ms(since: float) -> int:
    return int(round((time.perf_counter() - since) * 1000))


def her(
    d: Dataset,
    params: SolverParams,
    rng: np.random.Generator,
    *,
    clock_start: Optional[float] = None,
) -> SolverResult:
    """
    Memetic search: LADS-improved randomized-Borda population, then
    generations of CPSC crossover + LADS + replace-worst updating.

    Stops once more than max_gens consecutive generations fail to improve the best
    solution or when time_limit seconds have passed since clock_start
    (population initialization included).
    """
    params.validate()
    clock_start = time.perf_counter() if clock_start is None else clock_start
    deadline = clock_start + params.time_limit
    counters = SearchCounters()
    trace: list[tuple[int, int, int]] = []

    pop = population_init(d, params, rng, counters=counters, deadline=deadline, clock_start=clock_start)
    leader = pop.best()
    best, best_sum = leader.permutation, leader.fitness_sum
    time_to_best = _elapsed_ms(clock_start)

    idle_gens = 0
    while idle_gens <= params.max_gens:
        if time.perf_counter() >= deadline:
            logging.info(f"HER stopped by time limit at generation {counters.generations}")
            break
        if len(pop) < 2 or best_sum == 0:
            # no crossover possible, or nothing left to improve
            break

        parent_u, parent_v = pop.pick_parents(rng)
        child = cpsc(parent_u.permutation, parent_v.permutation, rng)
        improved = lads(
            child, d, params, rng,
            deadline=deadline, clock_start=clock_start, trace_offset=counters.iterations,
        )
        counters.absorb(improved)
        counters.generations += 1
        trace.extend(improved.trace)

        if improved.fitness_sum < best_sum:
            best, best_sum = improved.best, improved.fitness_sum
            time_to_best = improved.time_to_best_ms
            idle_gens = 0
            logging.info(f"HER generation {counters.generations}: best_sum={best_sum}")
        else:
            idle_gens += 1

        population_update(pop, improved.best, improved.fitness_sum)

    return SolverResult(
        algorithm="her",
        best=best,
        fitness_sum=best_sum,
        n=d.n,
        iterations=counters.iterations,
        evaluations=counters.evaluations,
        generations=counters.generations,
        elapsed_ms=_elapsed_ms(clock_start),
        time_to_best_ms=time_to_best,
        seed=params.seed,
        params=params,
        trace=trace,
    )


# =============================================================================
# ALGORITHM REGISTRY
# =============================================================================

def run_borda(d: Dataset, params: SolverParams, rng: np.random.Generator) -> SolverResult:
    started = time.perf_counter()
    best = borda(d, rng)
    return SolverResult(
        algorithm="borda",
        best=best,
        fitness_sum=fitness_sum(best, d),
        n=d.n,
        evaluations=1,
        elapsed_ms=_elapsed_ms(started),
        time_to_best_ms=_elapsed_ms(started),
        seed=params.seed,
        params=params,
    )


def _run_lads(d: Dataset, params: SolverParams, rng: np.random.Generator, incremental: bool) -> SolverResult:
    params.validate()
    started = time.perf_counter()
    start = borda(d, rng)
    result = lads(start, d, params, rng, incremental=incremental, clock_start=started)
    result.evaluations += 1
    result.elapsed_ms = _elapsed_ms(started)
    return result


def run_lads(d: Dataset, params: SolverParams, rng: np.random.Generator) -> SolverResult:
    return _run_lads(d, params, rng, incremental=True)


def run_lads_recompute(d: Dataset, params: SolverParams, rng: np.random.Generator) -> SolverResult:
    return _run_lads(d, params, rng, incremental=False)


def run_her(d: Dataset, params: SolverParams, rng: np.random.Generator) -> SolverResult:
    return her(d, params, rng)


ALGORITHMS: dict[str, Callable[[Dataset, SolverParams, np.random.Generator], SolverResult]] = {
    "borda": run_borda,
    "lads": run_lads,
    "lads-recompute": run_lads_recompute,
    "her": run_her,
}


def solve(algorithm: str, d: Dataset, params: SolverParams) -> SolverResult:
    """Run a registered algorithm with a fresh random stream seeded from params.seed."""
    runner = ALGORITHMS.get(algorithm)
    if runner is None:
        raise ValueError(f"Unknown algorithm: {algorithm} (choose from {', '.join(ALGORITHMS)})")
    params.validate()

    logging.info(f"Solving with {algorithm}: m={d.m}, n={d.n}, seed={params.seed}")
    result = runner(d, params, make_rng(params.seed))
    logging.info(
        f"Solve completed: {algorithm} | fitness={result.fitness} | iterations={result.iterations} | "
        f"generations={result.generations} | elapsed_ms={result.elapsed_ms}"
    )
    return result
