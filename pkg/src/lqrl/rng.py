"""Seed derivation for reproducible, order-independent sampling.

Every stochastic routine derives its generator from (master seed, domain tag,
index...) through `numpy.random.SeedSequence`, so trajectory i gets the same
stream whether it is simulated serially, in a batch, or on another thread.
"""

import numpy as np

# Domain tags keep independent subsystems off each other's streams.
ROLLOUT = 1
STATIONARY = 2
TD = 3
PG = 4
AC = 5
CHECK = 6


def generator(*keys: int) -> np.random.Generator:
    """Generator deterministically derived from a tuple of integer keys."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(list(keys))))


def spawn_seed(*keys: int) -> int:
    """Derive a 63-bit integer sub-seed (for labeling derived runs)."""
    return int(np.random.SeedSequence(list(keys)).generate_state(1, np.uint64)[0] >> 1)
