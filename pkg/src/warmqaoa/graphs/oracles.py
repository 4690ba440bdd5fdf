"""
Exact cut evaluation and small-instance oracles.

``brute_force_extremes`` is the ground truth behind every approximation
ratio the package reports, so it works on whole blocks of assignments at
a time instead of one cut per Python iteration.
"""

import logging
from typing import Optional

import numpy as np

from ..config.settings import Settings, resolve_settings
from ..errors import CapacityError, DegenerateInstanceError, InvalidArgumentError
from .models import Cut, CutExtremes, WeightedGraph

logger = logging.getLogger(__name__)

_BLOCK_BITS = 16


def cut_value(g: WeightedGraph, c: Cut) -> float:
    """
    Total weight of the edges crossing the cut.

    Args:
        g: Graph to evaluate on.
        c: Cut with one bit per vertex.

    Returns:
        float: Σ w · 1[bit_u ≠ bit_v].

    Raises:
        InvalidArgumentError: If the cut length differs from ``g.n``.
    """
    if c.n != g.n:
        raise InvalidArgumentError(f"cut has {c.n} bits but graph has {g.n} vertices")
    bits = c.assignment
    return float(sum(w for u, v, w in g.edges if bits[u] != bits[v]))


def cut_values_for_indices(g: WeightedGraph, indices: np.ndarray) -> np.ndarray:
    """
    Cut values of many assignments given as basis-state indices.

    Bit ``j`` of each index is the side of vertex ``j``.
    """
    indices = np.asarray(indices, dtype=np.int64)
    values = np.zeros(indices.shape, dtype=float)
    for u, v, w in g.edges:
        values += w * (((indices >> u) ^ (indices >> v)) & 1)
    return values


def brute_force_extremes(
    g: WeightedGraph, settings: Optional[Settings] = None
) -> CutExtremes:
    """
    Exact Max-Cut and Min-Cut by exhaustive enumeration.

    Bit 0 is fixed to 0: a cut and its complement have the same value, so
    only 2^(n-1) assignments are visited.

    Raises:
        CapacityError: If ``g.n`` exceeds the brute-force cap.
    """
    cap = resolve_settings(settings).brute_force_cap
    if g.n > cap:
        raise CapacityError(f"brute force limited to n <= {cap}, got n={g.n}")

    free = 2 ** (g.n - 1)
    block = 2**_BLOCK_BITS
    best_max, best_min = -np.inf, np.inf
    arg_max = arg_min = 0
    for start in range(0, free, block):
        # Free bits occupy positions 1..n-1.
        indices = np.arange(start, min(start + block, free), dtype=np.int64) << 1
        values = cut_values_for_indices(g, indices)
        hi, lo = int(np.argmax(values)), int(np.argmin(values))
        if values[hi] > best_max:
            best_max, arg_max = float(values[hi]), int(indices[hi])
        if values[lo] < best_min:
            best_min, arg_min = float(values[lo]), int(indices[lo])

    logger.debug("Brute force on n=%d: max=%g min=%g", g.n, best_max, best_min)
    return CutExtremes(
        max_cut=best_max,
        min_cut=best_min,
        max_witness=Cut.from_index(arg_max, g.n),
        min_witness=Cut.from_index(arg_min, g.n),
    )


def approximation_ratio(
    g: WeightedGraph, expected_cut: float, extremes: CutExtremes
) -> float:
    """
    Normalized approximation ratio (expected − Min-Cut)/(Max-Cut − Min-Cut).

    Args:
        g: Instance the extremes belong to.
        expected_cut: Expected (or sampled) cut value to normalize.
        extremes: Exact extremes of ``g``.

    Raises:
        DegenerateInstanceError: If Max-Cut equals Min-Cut (e.g. no edges).
    """
    spread = extremes.spread
    if not spread > 0:
        raise DegenerateInstanceError(
            f"instance with n={g.n}, m={g.m} has max cut equal to min cut"
        )
    return (expected_cut - extremes.min_cut) / spread
