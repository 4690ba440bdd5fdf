"""Seed handling shared by every stochastic routine."""

from typing import Optional, Union

import numpy as np

SeedLike = Optional[Union[int, np.random.Generator]]


def as_generator(seed: SeedLike) -> np.random.Generator:
    """
    Normalize a seed into a numpy Generator.

    A Generator passed in is returned as is, so callers can thread one
    stream through several operations.
    """
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def derive_seed(master: int, index: int) -> int:
    """
    Derive an independent sub-seed for attempt ``index`` of a run.

    Uses ``SeedSequence([master, index])`` so that attempts are
    reproducible individually, whatever order they run in.
    """
    if master < 0 or index < 0:
        raise ValueError("seeds and indices must be nonnegative")
    state = np.random.SeedSequence([master, index]).generate_state(1, dtype=np.uint32)
    return int(state[0])
