"""
rankagg - rank aggregation toolkit

Main entry point that wires the layers into one command line:

1. RANKING - ranking data model, Kendall distances, fitness
2. INSTANCES - Mallows benchmark generation, partialization, dataset files
3. SOLVER - Borda, LADS and the hybrid evolutionary search (HER)
4. CLI - generate / partialize / solve / eval / bench commands

Exit codes: 0 success, 1 runtime failure, 2 usage or parse error.
"""

import logging
import sys
from typing import Optional, Sequence

from cli.cli import build_parser, run_command
from shared.util_config import get_config

_VERBOSITY = ["WARNING", "INFO", "DEBUG"]


def _log_level(requested: Optional[str], verbose: int) -> str:
    if requested:
        return requested.upper()
    if verbose:
        return _VERBOSITY[min(verbose, len(_VERBOSITY) - 1)]
    return get_config().log_level


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    level = _log_level(args.log_level, args.verbose)
    if not isinstance(logging.getLevelName(level), int):
        level = "WARNING"
    logging.basicConfig(
        level=level,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
        force=True,
    )

    try:
        return run_command(args)
    except ValueError as e:
        logging.error(f"{args.command}: {e}")
        return 2
    except (OSError, RuntimeError) as e:
        logging.error(f"{args.command}: {e}")
        return 1
    except Exception as e:
        logging.exception(f"{args.command} failed: {e}")
        return 1


if __name__ == "__main__":
    sys.exit(main())
