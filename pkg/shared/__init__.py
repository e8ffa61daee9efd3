"""
Shared utilities used across the ranking, instances, solver and cli layers.
"""

from shared.util_responses import json_response, render_fitness
from shared.util_config import get_config, reset_config
from shared.util_rng import make_rng, derive_seed, RNG_ALGORITHM

__all__ = [
    "json_response",
    "render_fitness",
    "get_config",
    "reset_config",
    "make_rng",
    "derive_seed",
    "RNG_ALGORITHM",
]
