"""
Late acceptance driven search (LADS).

Swap-neighborhood local search with a late-acceptance rule: a candidate is
accepted when its fitness equals the current one or beats the largest of the
last L_h recorded costs. Candidates are evaluated incrementally unless the
recompute variant is requested.
"""

import logging
import sys
import time
from typing import Optional

import numpy as np

from ranking.ranking import Dataset, Permutation
from ranking.utility.util_distance import fitness_sum
from solver.utility.util_classes import CostList, SolverParams, SolverResult
from solver.utility.util_delta import SwapEvaluator, permutation_arrays

# random label pairs are drawn in blocks of this size
PAIR_BLOCK = 256


def _elapsed_ms(since: float) -> int:
    return int(round((time.perf_counter() - since) * 1000))


def lads(
    start: Permutation,
    d: Dataset,
    params: SolverParams,
    rng: np.random.Generator,
    *,
    incremental: bool = True,
    start_sum: Optional[int] = None,
    deadline: Optional[float] = None,
    clock_start: Optional[float] = None,
    trace_offset: int = 0,
) -> SolverResult:
    """
    Improve start until max_iters consecutive iterations fail to improve the
    best solution or the deadline (perf_counter seconds) passes.

    Returns the best solution found; its fitness never exceeds start's.
    """
    if start.m != d.m:
        raise ValueError(f"universe size mismatch: {start.m} vs {d.m}")
    began = time.perf_counter()
    clock_start = began if clock_start is None else clock_start
    if deadline is None:
        deadline = clock_start + params.time_limit
    algorithm = "lads" if incremental else "lads-recompute"

    m = d.m
    current = fitness_sum(start, d) if start_sum is None else start_sum
    order, pos = permutation_arrays(start)
    best_order, best = order.copy(), current
    time_to_best = _elapsed_ms(clock_start)
    trace: list[tuple[int, int, int]] = []

    if m == 2:
        # one neighbor only: evaluate it and stop
        other = Permutation((start.order[1], start.order[0]))
        other_sum = fitness_sum(other, d)
        if other_sum < best:
            best_order, best = np.array(other.order), other_sum
        return SolverResult(
            algorithm=algorithm, best=Permutation(tuple(int(x) for x in best_order)), fitness_sum=best,
            n=d.n, iterations=1, evaluations=1, elapsed_ms=_elapsed_ms(began),
            time_to_best_ms=_elapsed_ms(clock_start), seed=params.seed, params=params,
        )

    evaluator = SwapEvaluator(d) if incremental else None
    costs = CostList(params.history_len, current)
    history_len = params.history_len
    iters = idle = 0

    timed_out = False
    while idle < params.max_iters and not timed_out:
        firsts = rng.integers(1, m + 1, size=PAIR_BLOCK)
        seconds = rng.integers(1, m, size=PAIR_BLOCK)
        seconds += seconds >= firsts

        for a, b in zip(firsts.tolist(), seconds.tolist()):
            if time.perf_counter() >= deadline:
                logging.debug(f"LADS stopped by time limit after {iters} iterations")
                timed_out = True
                break
            costs.f_prev = current
            if evaluator is not None:
                candidate = current + evaluator.delta(order, pos, a, b)
            else:
                trial = order.copy()
                trial[pos[a]], trial[pos[b]] = b, a
                candidate = fitness_sum(Permutation(tuple(trial.tolist())), d)

            slot = iters % history_len
            if costs.accepts(current, candidate):
                pa, pb = pos[a], pos[b]
                order[pa], order[pb] = b, a
                pos[a], pos[b] = pb, pa
                current = candidate
                if current < best:
                    best_order, best = order.copy(), current
                    time_to_best = _elapsed_ms(clock_start)
                    idle = 0
                else:
                    idle += 1
            else:
                idle += 1

            costs.update(slot, current)
            assert costs.consistent(), "cost list maximum out of sync"
            iters += 1

            if params.trace_every and iters % params.trace_every == 0:
                trace.append((trace_offset + iters, current, best))
            if idle >= params.max_iters:
                break

    logging.debug(f"LADS finished: iterations={iters}, best_sum={best}")
    return SolverResult(
        algorithm=algorithm,
        best=Permutation(tuple(int(x) for x in best_order)),
        fitness_sum=best,
        n=d.n,
        iterations=iters,
        evaluations=iters,
        elapsed_ms=_elapsed_ms(began),
        time_to_best_ms=time_to_best,
        seed=params.seed,
        params=params,
        trace=trace,
    )


def measure_throughput(
    start: Permutation,
    d: Dataset,
    params: SolverParams,
    rng: np.random.Generator,
    seconds: float,
    incremental: bool = True,
) -> float:
    """LADS iterations per second over a fixed wall-clock budget."""
    budget = SolverParams(**{**params.to_dict(), "max_iters": sys.maxsize, "time_limit": seconds, "trace_every": 0})
    began = time.perf_counter()
    result = lads(start, d, budget, rng, incremental=incremental)
    elapsed = max(time.perf_counter() - began, 1e-9)
    return result.iterations / elapsed
