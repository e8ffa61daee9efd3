"""
Seedable random streams.

All randomness is drawn from numpy Generators on the PCG64 bit generator so
results are reproducible across platforms.
"""

import hashlib

import numpy as np

RNG_ALGORITHM = "numpy.PCG64"


def make_rng(seed: int) -> np.random.Generator:
    """Random stream for one run or one generated instance."""
    return np.random.Generator(np.random.PCG64(seed))


def derive_seed(*parts) -> int:
    """Stable 63-bit seed from arbitrary parts (ints, strings)."""
    key = "\x1f".join(str(p) for p in parts).encode("utf-8")
    digest = hashlib.blake2b(key, digest_size=8).digest()
    return int.from_bytes(digest, "big") >> 1
