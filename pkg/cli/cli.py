"""
CLI layer - command-line front end.

Commands:
- generate    Mallows benchmark instances (MM<m>n<theta>_<idx>.txt)
- partialize  turn a complete dataset into partial rankings with ties
- solve       run one algorithm on one instance, print a JSON result
- eval        fitness of a given permutation on an instance
- bench       every (instance, algorithm, seed) combination to CSV + summary

Every handler takes the parsed arguments and returns a process exit code.
Defaults come from shared.util_config (RANKAGG_* environment variables).
"""

import argparse
import csv
import logging
from pathlib import Path

from instances.instances import (
    PartializeParams,
    generate_dataset,
    instance_name,
    partialize_dataset,
    read_dataset,
    write_dataset,
)
from instances.utility.util_mallows import MallowsParams
from ranking.ranking import parse_permutation
from ranking.utility.util_distance import fitness_sum
from shared import RNG_ALGORITHM, derive_seed, get_config, json_response, render_fitness
from solver.solver import ALGORITHMS, solve
from solver.utility.util_classes import SolverParams


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got '{text}'")


def _float_list(text: str) -> list[float]:
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got '{text}'")


def _algo_list(text: str) -> list[str]:
    names = [x.strip() for x in text.split(",") if x.strip()]
    unknown = [x for x in names if x not in ALGORITHMS]
    if unknown or not names:
        raise argparse.ArgumentTypeError(f"unknown algorithm(s) {unknown}; choose from {', '.join(ALGORITHMS)}")
    return names


def _solver_params(args: argparse.Namespace, seed: int | None = None) -> SolverParams:
    params = SolverParams.from_config(
        max_gens=args.max_gens,
        pop_size=args.pop_size,
        beta=args.beta,
        max_iters=args.max_iters,
        history_len=args.history_len,
        time_limit=args.time_limit,
        seed=seed,
        trace_every=getattr(args, "trace_every", None),
    )
    params.validate()
    return params


# =============================================================================
# COMMAND HANDLERS
# =============================================================================

def cmd_generate(args: argparse.Namespace) -> int:
    if args.count < 1:
        raise ValueError(f"--count must be at least 1, got {args.count}")
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)

    written = 0
    for m in args.m:
        for theta in args.theta:
            if not theta > 0:
                raise ValueError(f"--theta must be positive, got {theta}")
            params = MallowsParams(m=m, theta=theta, n=args.n)
            params.validate()
            for idx in range(1, args.count + 1):
                seed = derive_seed(args.seed, m, f"{theta:.3f}", idx)
                dataset = generate_dataset(params, seed)
                path = out_dir / f"{instance_name(m, theta, idx)}.txt"
                write_dataset(dataset, path, comments=[
                    f"generator=mallows theta={theta:.3f} center=identity seed={seed} rng={RNG_ALGORITHM}",
                ])
                written += 1

    logging.info(f"Generated {written} instance(s) in {out_dir}")
    return 0


def cmd_partialize(args: argparse.Namespace) -> int:
    dataset = read_dataset(args.input, syntax=args.syntax)
    params = PartializeParams(p_discard=args.p_discard, p_keep=args.p_keep)
    params.validate()
    partial = partialize_dataset(dataset, params, args.seed)
    write_dataset(partial, args.output, comments=[
        f"partialized from={Path(args.input).name} p_discard={args.p_discard:.6g} "
        f"p_keep={args.p_keep:.6g} seed={args.seed} rng={RNG_ALGORITHM}",
    ])
    return 0


def cmd_solve(args: argparse.Namespace) -> int:
    dataset = read_dataset(args.input, syntax=args.syntax)
    params = _solver_params(args, seed=args.seed)
    result = solve(args.algo, dataset, params)
    json_response(result.to_dict(instance=args.input))

    if args.trace:
        with open(args.trace, "w", encoding="utf-8", newline="") as handle:
            writer = csv.writer(handle, lineterminator="\n")
            writer.writerow(["iteration", "current_sum", "best_sum"])
            writer.writerows(result.trace)
    return 0


def cmd_eval(args: argparse.Namespace) -> int:
    dataset = read_dataset(args.input, syntax=args.syntax)
    candidate = parse_permutation(args.ranking, dataset.m)
    total = fitness_sum(candidate, dataset)
    json_response({"fitness_sum": total, "fitness": render_fitness(total, dataset.n)})
    return 0


def cmd_bench(args: argparse.Namespace) -> int:
    from cli.utility.util_bench import build_tasks, format_summary, run_bench, store_rows, summarize, write_csv

    directory = Path(args.dir)
    if not directory.is_dir():
        raise ValueError(f"not a directory: {directory}")
    paths = sorted(p for p in directory.glob(args.pattern) if p.is_file())
    if not paths:
        raise ValueError(f"no instance files matching '{args.pattern}' in {directory}")

    params = _solver_params(args)
    tasks = build_tasks(paths, args.algos, args.seeds, params, args.master_seed, args.syntax)
    rows = run_bench(tasks, jobs=args.jobs or get_config().jobs)

    with open(args.out, "w", encoding="utf-8", newline="") as handle:
        write_csv(rows, handle)
    print(format_summary(summarize(rows)))

    store_url = args.store or get_config().results_db
    store_failures = 0
    if store_url:
        from cli.utility.util_database import dispose_engine, init_engine
        init_engine(store_url)
        try:
            store_failures = store_rows(rows)
        finally:
            dispose_engine()

    failed = sum(1 for row in rows if row.status != "ok")
    if failed:
        logging.error(f"{failed} of {len(rows)} bench runs failed")
    return 1 if failed or store_failures else 0


# =============================================================================
# PARSER
# =============================================================================

def _add_syntax(p: argparse.ArgumentParser) -> None:
    p.add_argument("--syntax", choices=["ranking", "ranks"], default="ranking",
                   help="dataset line syntax: '1|3,4|2' rankings or space-separated ranks")


def _add_solver_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-gens", type=int, help="generations without improvement before HER stops")
    p.add_argument("--pop-size", type=int, help="population size T")
    p.add_argument("--beta", type=float, help="randomized Borda factor in (0, 0.5)")
    p.add_argument("--max-iters", type=int, help="LADS iterations without improvement")
    p.add_argument("--history-len", type=int, help="LADS cost list length L_h")
    p.add_argument("--time-limit", type=float, help="wall-clock seconds per run")


def _configure_generate(p: argparse.ArgumentParser) -> None:
    p.add_argument("--m", type=_int_list, required=True, help="label count(s), comma-separated")
    p.add_argument("--theta", type=_float_list, required=True, help="spread(s), comma-separated")
    p.add_argument("--n", type=int, default=100, help="rankings per instance")
    p.add_argument("--count", type=int, default=20, help="instances per (m, theta)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True, help="output directory")


def _configure_partialize(p: argparse.ArgumentParser) -> None:
    p.add_argument("input")
    p.add_argument("--p-discard", "--p-d", dest="p_discard", type=float, default=2 / 3)
    p.add_argument("--p-keep", "--p-k", dest="p_keep", type=float, default=5 / 6)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", dest="output", required=True, help="output dataset file")
    _add_syntax(p)


def _configure_solve(p: argparse.ArgumentParser) -> None:
    p.add_argument("input")
    p.add_argument("--algo", choices=list(ALGORITHMS), default="her")
    p.add_argument("--seed", type=int)
    p.add_argument("--trace-every", type=int, help="record LADS cost every k iterations")
    p.add_argument("--trace", help="write the cost-drop trace to this CSV file")
    _add_solver_flags(p)
    _add_syntax(p)


def _configure_eval(p: argparse.ArgumentParser) -> None:
    p.add_argument("input")
    p.add_argument("ranking", help="candidate permutation, e.g. 1|3|2")
    _add_syntax(p)


def _configure_bench(p: argparse.ArgumentParser) -> None:
    p.add_argument("dir", help="directory of instance files")
    p.add_argument("--algos", type=_algo_list, default=["her"], help="comma-separated algorithms")
    p.add_argument("--seeds", type=_int_list, default=[1], help="comma-separated run seeds")
    p.add_argument("--master-seed", type=int, default=0)
    p.add_argument("--jobs", type=int, help="worker processes")
    p.add_argument("--out", default="bench.csv", help="CSV output file")
    p.add_argument("--pattern", default="*.txt", help="instance file glob")
    p.add_argument("--store", help="SQLAlchemy URL of a results store, e.g. sqlite:///bench.db")
    _add_solver_flags(p)
    _add_syntax(p)


COMMANDS = {
    "generate": {
        "handler": cmd_generate,
        "configure": _configure_generate,
        "help": "generate Mallows benchmark instances",
    },
    "partialize": {
        "handler": cmd_partialize,
        "configure": _configure_partialize,
        "help": "turn complete rankings into partial rankings with ties",
    },
    "solve": {
        "handler": cmd_solve,
        "configure": _configure_solve,
        "help": "solve one instance and print a JSON result",
    },
    "eval": {
        "handler": cmd_eval,
        "configure": _configure_eval,
        "help": "evaluate a permutation on an instance",
    },
    "bench": {
        "handler": cmd_bench,
        "configure": _configure_bench,
        "help": "run a benchmark grid and write CSV",
    },
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rankagg", description="Rank aggregation solvers and benchmarks")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="more logging (repeatable)")
    parser.add_argument("--log-level", help="logging level (default from RANKAGG_LOG_LEVEL)")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, config in COMMANDS.items():
        command = sub.add_parser(name, help=config["help"])
        config["configure"](command)
        command.set_defaults(handler=config["handler"])
    return parser


def run_command(args: argparse.Namespace) -> int:
    return args.handler(args)


__all__ = ["COMMANDS", "build_parser", "run_command"]

