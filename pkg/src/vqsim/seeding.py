"""Deterministic seed handling.

All randomness in an experiment flows from one integer seed; restarts
get independent substreams via SeedSequence spawning, so results are
reproducible bit-for-bit.
"""

from __future__ import annotations

import numpy as np


def rng_from(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


def spawn_rngs(seed: int, n: int) -> list[np.random.Generator]:
    """n independent generators derived from one seed."""
    return [np.random.default_rng(child) for child in np.random.SeedSequence(seed).spawn(n)]
