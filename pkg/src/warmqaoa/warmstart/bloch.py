"""Closed-form depth-0 quantities for separable (product) initial states."""

import logging
import math

import numpy as np

from ..errors import InvalidArgumentError
from ..graphs.models import Cut, WeightedGraph
from ..utils.seeding import SeedLike, as_generator
from .models import BlochAngles

logger = logging.getLogger(__name__)


def averaged_flip_probability(k: int, theta: float) -> float:
    """
    Rotation-averaged probability that two qubits measure differently.

    For rank-k vectors at angle θ, averaged over uniform rotations, the
    probability is f_k(θ) = ½(1 − cosθ/k).
    """
    if k not in (2, 3):
        raise InvalidArgumentError(f"k must be 2 or 3, got {k}")
    if not 0.0 <= theta <= math.pi:
        raise InvalidArgumentError("theta must lie in [0, pi]")
    return 0.5 * (1.0 - math.cos(theta) / k)


def depth0_expected_cut(g: WeightedGraph, s: BlochAngles) -> float:
    """
    Exact expected cut of measuring the product state ``s``.

    Σ w_ij · ½(1 − cosθ_i cosθ_j); azimuths do not affect Z-basis sampling.
    """
    if s.n != g.n:
        raise InvalidArgumentError(f"state has {s.n} qubits but graph has {g.n}")
    us, vs, ws = g.edge_arrays
    cos_theta = np.cos(s.theta)
    return float(np.sum(ws * 0.5 * (1.0 - cos_theta[us] * cos_theta[vs])))


def single_cut_epsilon_state(c: Cut, epsilon: float) -> BlochAngles:
    """
    Product state concentrated near a single cut.

    Side-0 vertices get θ = ε and side-1 vertices θ = π − ε (φ = 0), so the
    cut itself is sampled with probability cos^{2n}(ε/2).

    Raises:
        InvalidArgumentError: If ε is outside [0, π/2].
    """
    if not 0.0 <= epsilon <= math.pi / 2:
        raise InvalidArgumentError("epsilon must lie in [0, pi/2]")
    if epsilon == 0.0:
        logger.warning("epsilon = 0 puts every qubit at a pole")
    bits = np.asarray(c.assignment)
    theta = np.where(bits == 0, epsilon, math.pi - epsilon)
    return BlochAngles(theta, np.zeros(c.n))


def random_bloch_angles(n: int, seed: SeedLike = None) -> BlochAngles:
    """Independent qubits drawn uniformly from the Bloch sphere."""
    if n < 1:
        raise InvalidArgumentError("n must be positive")
    rng = as_generator(seed)
    theta = np.arccos(rng.uniform(-1.0, 1.0, size=n))
    phi = rng.uniform(0.0, 2 * math.pi, size=n)
    return BlochAngles(theta, phi)
