"""
Environment variable loading and configuration.

Every default the command line exposes can be overridden with a
RANKAGG_-prefixed environment variable.
"""

import os
import logging
from dataclasses import dataclass
from typing import Callable, Optional, TypeVar

T = TypeVar("T")

ENV_PREFIX = "RANKAGG_"


@dataclass
class AppConfig:
    """Application configuration loaded from environment variables."""
    # Solver defaults (parameter table of the hybrid evolutionary search)
    max_gens: int = 60
    pop_size: int = 20
    beta: float = 0.2
    max_iters: int = 5000
    history_len: int = 5
    time_limit: float = 7200.0
    seed: int = 0

    # Benchmark runner
    jobs: int = 1
    results_db: Optional[str] = None

    # Logging
    log_level: str = "WARNING"


_config: Optional[AppConfig] = None


def _env(name: str, cast: Callable[[str], T], default: T) -> T:
    raw = os.getenv(ENV_PREFIX + name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return cast(raw.strip())
    except ValueError:
        logging.warning(f"Ignoring {ENV_PREFIX}{name}={raw!r}: not a valid {cast.__name__}")
        return default


def get_config() -> AppConfig:
    """Load and cache application configuration from environment variables."""
    global _config
    if _config is not None:
        return _config

    defaults = AppConfig()
    _config = AppConfig(
        max_gens=_env("MAX_GENS", int, defaults.max_gens),
        pop_size=_env("POP_SIZE", int, defaults.pop_size),
        beta=_env("BETA", float, defaults.beta),
        max_iters=_env("MAX_ITERS", int, defaults.max_iters),
        history_len=_env("HISTORY_LEN", int, defaults.history_len),
        time_limit=_env("TIME_LIMIT", float, defaults.time_limit),
        seed=_env("SEED", int, defaults.seed),
        jobs=_env("JOBS", int, defaults.jobs),
        results_db=os.getenv(ENV_PREFIX + "RESULTS_DB") or None,
        log_level=_env("LOG_LEVEL", str, defaults.log_level).upper(),
    )

    if _config.jobs < 1:
        logging.warning(f"{ENV_PREFIX}JOBS={_config.jobs} is not positive, using 1")
        _config.jobs = 1

    return _config


def reset_config() -> None:
    """Drop the cached configuration so the next get_config() rereads the environment."""
    global _config
    _config = None
