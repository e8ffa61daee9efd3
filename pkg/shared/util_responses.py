"""
Shared output utilities.

stdout carries machine-readable results only; diagnostics go through logging.
"""

import json
import sys
from decimal import Decimal, ROUND_HALF_EVEN
from typing import TextIO

FITNESS_PLACES = Decimal("0.001")


def render_fitness(fitness_sum: int, n: int) -> str:
    """Exact sum/n rounded half-even to 3 decimals, e.g. 3/2 -> '1.500'."""
    return str((Decimal(fitness_sum) / Decimal(n)).quantize(FITNESS_PLACES, rounding=ROUND_HALF_EVEN))


def json_response(data: dict, stream: TextIO | None = None) -> str:
    """Helper for JSON responses: one object per line, stable key order."""
    text = json.dumps(data)
    out = stream or sys.stdout
    out.write(text + "\n")
    out.flush()
    return text
