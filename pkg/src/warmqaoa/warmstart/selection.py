"""
Warm-start selection pipeline.

Solve (or project) several times, keep the solution with the best
BM-MC_k objective, then emit rotated Bloch-sphere initializations of it.
Attempt ``a`` of a run seeded with ``seed`` uses ``derive_seed(seed, a)``.
"""

import logging
import math
from typing import List, Optional, Tuple

import numpy as np

from ..errors import CapacityError, InvalidArgumentError
from ..graphs.models import CutExtremes, WeightedGraph
from ..graphs.oracles import brute_force_extremes
from ..utils.seeding import SeedLike, as_generator, derive_seed
from .bloch import averaged_flip_probability, depth0_expected_cut
from .models import BlochAngles, RelaxedSolution, WarmstartReport
from .relaxation import (
    DEFAULT_TOL,
    bm_local_solve,
    bm_objective,
    hyperplane_expected_cut,
    sdp_solve,
)
from .rotations import (
    project_to_subspace,
    rotate_uniform,
    rotate_vertex_at_top,
    to_bloch,
)

logger = logging.getLogger(__name__)

METHODS = ("bm", "gw_projected")
ROTATIONS = ("uniform", "vertex_at_top")

_SDP_STREAM = 1_000_000
_ROTATION_STREAM = 1_000_001


def _best_relaxation(
    g: WeightedGraph, method: str, k: int, attempts: int, seed: int, tol: float
) -> RelaxedSolution:
    if method == "bm":
        candidates = (
            bm_local_solve(g, k, seed=derive_seed(seed, attempt), tol=tol)
            for attempt in range(attempts)
        )
    else:
        sdp = sdp_solve(g, seed=derive_seed(seed, _SDP_STREAM), tol=tol)
        if sdp.rank <= k:
            sdp = sdp.padded(k + 1)
        candidates = (
            project_to_subspace(sdp, k, seed=derive_seed(seed, attempt))
            for attempt in range(attempts)
        )

    best: Optional[RelaxedSolution] = None
    best_value = -math.inf
    for attempt, candidate in enumerate(candidates):
        value = bm_objective(g, candidate)
        logger.debug(
            "%s attempt %d: BM-MC_%d objective %.10g", method, attempt, k, value
        )
        if value > best_value:
            best, best_value = candidate, value
    assert best is not None
    return best


def rotated_initializations(
    x: RelaxedSolution, rotation: str, count: int, seed: SeedLike = None
) -> List[BlochAngles]:
    """
    Bloch-sphere initializations from ``count`` random global rotations.

    ``vertex_at_top`` picks the vertex uniformly at random each time.
    """
    if rotation not in ROTATIONS:
        raise InvalidArgumentError(f"rotation must be one of {ROTATIONS}")
    rng = as_generator(seed)
    states = []
    for _ in range(count):
        if rotation == "uniform":
            rotated = rotate_uniform(x, rng)
        else:
            rotated = rotate_vertex_at_top(x, int(rng.integers(x.n)))
        states.append(to_bloch(rotated))
    return states


def _extremes_or_none(g: WeightedGraph) -> Optional[CutExtremes]:
    try:
        return brute_force_extremes(g)
    except CapacityError:
        logger.info("Instance too large for exact Max-Cut; kappa values omitted")
        return None


def select_warmstart(
    g: WeightedGraph,
    method: str = "bm",
    k: int = 2,
    attempts: int = 5,
    rotation: str = "vertex_at_top",
    rotations_per_solution: int = 5,
    seed: int = 0,
    extremes: Optional[CutExtremes] = None,
    tol: float = DEFAULT_TOL,
) -> Tuple[List[BlochAngles], WarmstartReport]:
    """
    Build warm-started initial states for ``g``.

    Args:
        g: Max-Cut instance.
        method: ``bm`` (local rank-k solves) or ``gw_projected`` (random
            k-dimensional projections of the SDP proxy solution).
        k: Rank of the warm-start, 2 or 3.
        attempts: Number of solves/projections; the best BM objective wins.
        rotation: ``uniform`` or ``vertex_at_top``.
        rotations_per_solution: Number of rotated initializations emitted.
        seed: Master seed.
        extremes: Exact cut extremes; computed by brute force when omitted
            and the instance is small enough.

    Returns:
        The initial states and a report on the chosen relaxation.
    """
    if method not in METHODS:
        raise InvalidArgumentError(f"method must be one of {METHODS}")
    if k not in (2, 3):
        raise InvalidArgumentError(f"k must be 2 or 3, got {k}")
    if attempts < 1 or rotations_per_solution < 1:
        raise InvalidArgumentError("attempts and rotations_per_solution must be >= 1")

    best = _best_relaxation(g, method, k, attempts, seed, tol)
    states = rotated_initializations(
        best, rotation, rotations_per_solution, seed=derive_seed(seed, _ROTATION_STREAM)
    )

    objective = bm_objective(g, best)
    expected = hyperplane_expected_cut(g, best)
    if extremes is None:
        extremes = _extremes_or_none(g)
    kappa_close = kappa_approx = None
    if extremes is not None and extremes.max_cut != 0:
        kappa_close = objective / extremes.max_cut
        kappa_approx = expected / extremes.max_cut

    report = WarmstartReport(
        method=method,
        rank=k,
        attempts=attempts,
        bm_objective=objective,
        hp_expected=expected,
        kappa_close=kappa_close,
        kappa_approx=kappa_approx,
        seed=seed,
        stationary=best.stationary,
    )
    logger.info(
        "Warm-start %s rank %d: BM objective %.6g, hyperplane expectation %.6g",
        method,
        k,
        objective,
        expected,
    )
    return states, report


def rotation_averaged_depth0(
    g: WeightedGraph, x: RelaxedSolution, samples: int, seed: SeedLike = None
) -> float:
    """Mean depth-0 expected cut over ``samples`` uniform rotations of ``x``."""
    if samples < 1:
        raise InvalidArgumentError("samples must be positive")
    rng = as_generator(seed)
    total = 0.0
    for _ in range(samples):
        total += depth0_expected_cut(g, to_bloch(rotate_uniform(x, rng)))
    return total / samples


def averaged_depth0_bound(g: WeightedGraph, x: RelaxedSolution) -> float:
    """Closed form of the rotation average: Σ w_ij f_k(θ_ij)."""
    if x.rank not in (2, 3):
        raise InvalidArgumentError("rotation averages are defined for rank 2 and 3")
    us, vs, ws = g.edge_arrays
    dots = np.clip(np.einsum("ij,ij->i", x.vectors[us], x.vectors[vs]), -1.0, 1.0)
    return float(
        sum(
            w * averaged_flip_probability(x.rank, math.acos(dot))
            for w, dot in zip(ws, dots)
        )
    )
