"""
Burer–Monteiro relaxation of Max-Cut and hyperplane rounding.

The rank-k relaxation maximizes Σ (w_ij/2)(1 − x_i·x_j) over unit vectors
x_i ∈ R^k. Local solves use Riemannian gradient ascent on the product of
spheres; at rank ⌈√(2n)⌉ + 1 the same solver stands in for the
Goemans–Williamson SDP.
"""

import logging
import math
from collections import deque
from typing import Deque, Optional, Tuple

import numpy as np

from ..errors import InvalidArgumentError
from ..graphs.models import Cut, WeightedGraph
from ..graphs.oracles import cut_value
from ..utils.seeding import SeedLike, as_generator
from .models import RelaxedSolution

logger = logging.getLogger(__name__)

DEFAULT_TOL = 1e-8
DEFAULT_MAX_ITERS = 10_000
_ARMIJO = 1e-4
_MAX_STEP = 1e3
_MIN_STEP = 1e-14
_SAMPLE_CHUNK = 20_000
_STALL_WINDOW = 50
_STALL_GAIN = 1e-12


def _check_dimensions(g: WeightedGraph, x: RelaxedSolution) -> None:
    if x.n != g.n:
        raise InvalidArgumentError(f"solution has {x.n} vectors but graph has {g.n}")


def _edge_dots(g: WeightedGraph, vectors: np.ndarray) -> np.ndarray:
    us, vs, _ = g.edge_arrays
    return np.clip(np.einsum("ij,ij->i", vectors[us], vectors[vs]), -1.0, 1.0)


def bm_objective(g: WeightedGraph, x: RelaxedSolution) -> float:
    """
    BM-MC_k objective Σ_{(i,j)∈E} (w_ij/2)(1 − x_i·x_j).

    Raises:
        InvalidArgumentError: If the vector count differs from ``g.n``.
    """
    _check_dimensions(g, x)
    ws = g.edge_arrays[2]
    return float(np.sum(0.5 * ws * (1.0 - _edge_dots(g, x.vectors))))


def hyperplane_expected_cut(g: WeightedGraph, x: RelaxedSolution) -> float:
    """
    Expected cut of random-hyperplane rounding, Σ w_ij · arccos(x_i·x_j)/π.

    Raises:
        InvalidArgumentError: If the vector count differs from ``g.n``.
    """
    _check_dimensions(g, x)
    ws = g.edge_arrays[2]
    return float(np.sum(ws * np.arccos(_edge_dots(g, x.vectors)) / math.pi))


def hyperplane_round(x: RelaxedSolution, seed: SeedLike = None) -> Cut:
    """
    Round to a cut with a standard Gaussian direction r.

    Vertex i goes to side 0 iff x_i·r > 0. A direction orthogonal to some
    x_i is discarded and redrawn.
    """
    rng = as_generator(seed)
    while True:
        projections = x.vectors @ rng.standard_normal(x.rank)
        if np.all(projections != 0):
            return Cut.from_sequence((projections <= 0).astype(int))


def _cut_values_from_projections(
    g: WeightedGraph, projections: np.ndarray
) -> np.ndarray:
    """Cut values for sign patterns given as an (n, samples) array."""
    sides = projections <= 0
    us, vs, ws = g.edge_arrays
    return ws @ (sides[us] != sides[vs]).astype(float)


def _redraw_ties(
    rng: np.random.Generator, vectors: np.ndarray, directions: np.ndarray
) -> np.ndarray:
    projections = vectors @ directions
    ties = np.any(projections == 0, axis=0)
    while np.any(ties):
        shape = (directions.shape[0], int(ties.sum()))
        directions[:, ties] = rng.standard_normal(shape)
        projections = vectors @ directions
        ties = np.any(projections == 0, axis=0)
    return projections


def sample_hyperplane_cut_values(
    g: WeightedGraph, x: RelaxedSolution, samples: int, seed: SeedLike = None
) -> np.ndarray:
    """Cut values of ``samples`` independent hyperplane roundings of ``x``."""
    _check_dimensions(g, x)
    rng = as_generator(seed)
    values = []
    for start in range(0, samples, _SAMPLE_CHUNK):
        count = min(_SAMPLE_CHUNK, samples - start)
        directions = rng.standard_normal((x.rank, count))
        values.append(
            _cut_values_from_projections(g, _redraw_ties(rng, x.vectors, directions))
        )
    return np.concatenate(values) if values else np.zeros(0)


def two_step_cut_values(
    g: WeightedGraph, x: RelaxedSolution, k: int, samples: int, seed: SeedLike = None
) -> np.ndarray:
    """
    Cut values of ``samples`` independent two-step roundings.

    Each sample projects the vectors onto a fresh uniformly random
    k-dimensional subspace, renormalizes them and rounds the result with a
    fresh Gaussian direction inside that subspace.
    """
    _check_dimensions(g, x)
    if not 1 <= k < x.rank:
        raise InvalidArgumentError(f"need 1 <= k < rank={x.rank}, got k={k}")
    rng = as_generator(seed)
    values = []
    for start in range(0, samples, _SAMPLE_CHUNK):
        count = min(_SAMPLE_CHUNK, samples - start)
        bases, _ = np.linalg.qr(rng.standard_normal((count, x.rank, k)))
        coords = np.einsum("nr,srk->snk", x.vectors, bases)
        norms = np.linalg.norm(coords, axis=2)
        degenerate = np.any(norms == 0, axis=1)
        while np.any(degenerate):
            redrawn, _ = np.linalg.qr(
                rng.standard_normal((int(degenerate.sum()), x.rank, k))
            )
            coords[degenerate] = np.einsum("nr,srk->snk", x.vectors, redrawn)
            norms = np.linalg.norm(coords, axis=2)
            degenerate = np.any(norms == 0, axis=1)
        unit = coords / norms[:, :, None]
        directions = rng.standard_normal((count, k))
        projections = np.einsum("snk,sk->ns", unit, directions)
        values.append(_cut_values_from_projections(g, projections))
    return np.concatenate(values) if values else np.zeros(0)


def best_hyperplane_cut(
    g: WeightedGraph, x: RelaxedSolution, trials: int, seed: SeedLike = None
) -> Tuple[Cut, float]:
    """
    Best of ``trials`` hyperplane roundings of ``x``.

    Returns:
        Tuple[Cut, float]: The best cut and its value.
    """
    if trials < 1:
        raise InvalidArgumentError("trials must be positive")
    rng = as_generator(seed)
    best_cut = hyperplane_round(x, rng)
    best_value = cut_value(g, best_cut)
    for _ in range(trials - 1):
        candidate = hyperplane_round(x, rng)
        value = cut_value(g, candidate)
        if value > best_value:
            best_cut, best_value = candidate, value
    return best_cut, best_value


def _normalize_rows(vectors: np.ndarray) -> np.ndarray:
    return vectors / np.linalg.norm(vectors, axis=1, keepdims=True)


def bm_local_solve(
    g: WeightedGraph,
    k: int,
    seed: SeedLike = None,
    tol: float = DEFAULT_TOL,
    max_iters: int = DEFAULT_MAX_ITERS,
) -> RelaxedSolution:
    """
    Locally optimal rank-k Burer–Monteiro solution.

    Riemannian gradient ascent on the product of unit spheres from a
    uniformly random start, with an Armijo backtracking line search and a
    retraction by row normalization. Stops when the Riemannian gradient
    norm drops below ``tol`` × W̄, or when the objective gains less than
    1e-12 × W̄ over 50 accepted steps while the gradient norm is below
    √(tol × W̄), where W̄ is the total absolute edge weight.

    Returns:
        RelaxedSolution: The final iterate; ``stationary`` is False when the
        iteration cap was reached first.
    """
    if k < 2:
        raise InvalidArgumentError(f"rank k must be at least 2, got {k}")
    rng = as_generator(seed)
    weights = g.adjacency
    base = 0.5 * g.total_weight
    scale = g.absolute_weight if g.absolute_weight > 0 else 1.0
    grad_tol = tol * scale
    recent: Deque[float] = deque(maxlen=_STALL_WINDOW + 1)

    def objective(vectors: np.ndarray) -> float:
        return base - 0.25 * float(np.sum(weights * (vectors @ vectors.T)))

    current = _normalize_rows(rng.standard_normal((g.n, k)))
    value = objective(current)
    recent.append(value)
    step = 1.0
    stationary = False
    grad_norm = math.inf
    iteration = 0
    for iteration in range(max_iters):
        euclidean = -0.5 * weights @ current
        radial = np.sum(euclidean * current, axis=1, keepdims=True)
        riemannian = euclidean - radial * current
        grad_norm = float(np.linalg.norm(riemannian))
        if grad_norm < grad_tol:
            stationary = True
            break

        accepted = False
        while step > _MIN_STEP:
            candidate = _normalize_rows(current + step * riemannian)
            candidate_value = objective(candidate)
            if candidate_value >= value + _ARMIJO * step * grad_norm**2:
                current, value = candidate, candidate_value
                step = min(2.0 * step, _MAX_STEP)
                accepted = True
                break
            step *= 0.5
        if not accepted:
            # No ascent direction left at floating-point resolution.
            stationary = grad_norm < math.sqrt(grad_tol)
            break
        recent.append(value)
        stalled = (
            len(recent) == recent.maxlen
            and recent[-1] - recent[0] < _STALL_GAIN * scale
        )
        if stalled and grad_norm < math.sqrt(grad_tol):
            stationary = True
            break

    if not stationary:
        logger.warning(
            "BM solve (n=%d, k=%d) stopped after %d iterations, gradient norm %.3g",
            g.n,
            k,
            iteration + 1,
            grad_norm,
        )
    logger.debug("BM solve (n=%d, k=%d): objective %.10g", g.n, k, value)
    return RelaxedSolution(current, stationary=stationary)


def sdp_rank(n: int) -> int:
    """Factorization rank min(n, ⌈√(2n)⌉ + 1), never below 2."""
    return max(2, min(n, math.ceil(math.sqrt(2 * n)) + 1))


def sdp_solve(
    g: WeightedGraph,
    restarts: int = 3,
    seed: SeedLike = None,
    tol: float = DEFAULT_TOL,
) -> RelaxedSolution:
    """
    Proxy for the Goemans–Williamson SDP optimum.

    Runs ``restarts`` Burer–Monteiro solves at rank ``sdp_rank(n)`` and
    keeps the best, zero-padded to rank n (rank 2 for a single vertex).
    The solves share one stream drawn from ``seed``; None means fresh entropy.
    """
    if restarts < 1:
        raise InvalidArgumentError("restarts must be positive")
    rng = as_generator(seed)
    rank = sdp_rank(g.n)
    best: Optional[RelaxedSolution] = None
    best_value = -math.inf
    for _ in range(restarts):
        solution = bm_local_solve(g, rank, seed=rng, tol=tol)
        value = bm_objective(g, solution)
        if value > best_value:
            best, best_value = solution, value
    assert best is not None
    logger.debug("SDP proxy at rank %d: value %.10g", rank, best_value)
    return best.padded(max(g.n, 2))
