"""
Subspace projection, global rotations and the Bloch-sphere mapping.

Relaxation solutions are only defined up to a global isometry; these
functions choose the isometry before the vectors become qubit states.
Rank-2 solutions are placed on the xz great circle of the Bloch sphere.
"""

import math

import numpy as np
from scipy.spatial.transform import Rotation

from ..errors import InvalidArgumentError
from ..utils.seeding import SeedLike, as_generator
from .models import BlochAngles, RelaxedSolution


def _check_bloch_rank(x: RelaxedSolution) -> None:
    if x.rank not in (2, 3):
        raise InvalidArgumentError(f"only rank 2 and 3 map to qubits, got {x.rank}")


def project_to_subspace(
    x: RelaxedSolution, k: int, seed: SeedLike = None
) -> RelaxedSolution:
    """
    Unit-scale projection onto a uniformly random k-dimensional subspace.

    The subspace basis is an orthonormalized Gaussian matrix; the output
    vectors Π_A(x_i)/‖Π_A(x_i)‖ are expressed in that basis. A subspace
    orthogonal to some x_i is discarded and redrawn.

    Raises:
        InvalidArgumentError: If ``k`` is not in [2, x.rank).
    """
    if not 2 <= k < x.rank:
        raise InvalidArgumentError(f"need 2 <= k < rank={x.rank}, got k={k}")
    rng = as_generator(seed)
    while True:
        basis, _ = np.linalg.qr(rng.standard_normal((x.rank, k)))
        coords = x.vectors @ basis
        norms = np.linalg.norm(coords, axis=1, keepdims=True)
        if np.all(norms > 0):
            return RelaxedSolution(coords / norms, stationary=x.stationary)


def _planar_rotation(angle: float) -> np.ndarray:
    c, s = math.cos(angle), math.sin(angle)
    return np.array([[c, -s], [s, c]])


def rotate_uniform(x: RelaxedSolution, seed: SeedLike = None) -> RelaxedSolution:
    """
    Apply a uniformly random global rotation.

    Rank 3 uses a Haar-random element of SO(3); rank 2 a planar rotation by
    an angle drawn from U[0, 2π).
    """
    _check_bloch_rank(x)
    rng = as_generator(seed)
    if x.rank == 3:
        matrix = Rotation.random(None, rng).as_matrix()
    else:
        matrix = _planar_rotation(rng.uniform(0.0, 2 * math.pi))
    return RelaxedSolution(x.vectors @ matrix.T, stationary=x.stationary)


def _rotation_to_north(vector: np.ndarray) -> np.ndarray:
    """Rotation matrix taking the unit vector ``vector`` to (0, 0, 1)."""
    north = np.array([0.0, 0.0, 1.0])
    axis = np.cross(vector, north)
    sin_angle = float(np.linalg.norm(axis))
    cos_angle = float(np.dot(vector, north))
    if sin_angle < 1e-15:
        if cos_angle > 0:
            return np.eye(3)
        return np.diag([1.0, -1.0, -1.0])
    angle = math.atan2(sin_angle, cos_angle)
    return Rotation.from_rotvec(axis / sin_angle * angle).as_matrix()


def rotate_vertex_at_top(x: RelaxedSolution, v: int) -> RelaxedSolution:
    """
    Rotate so that vertex ``v`` sits at the pole.

    Rank 3 maps x_v to (0, 0, 1); rank 2 maps x_v to (0, 1), which
    ``to_bloch`` sends to the north pole. Vertex v is then exactly at the
    pole so a second application is the identity.
    """
    _check_bloch_rank(x)
    if not 0 <= v < x.n:
        raise InvalidArgumentError(f"vertex {v} out of range for n={x.n}")
    target = x.vectors[v]
    if x.rank == 3:
        matrix = _rotation_to_north(target)
    else:
        matrix = _planar_rotation(math.pi / 2 - math.atan2(target[1], target[0]))
    rotated = x.vectors @ matrix.T
    rotated[v] = [0.0, 0.0, 1.0] if x.rank == 3 else [0.0, 1.0]
    return RelaxedSolution.from_unnormalized(rotated, stationary=x.stationary)


def to_bloch(x: RelaxedSolution) -> BlochAngles:
    """
    Map a rank-2 or rank-3 solution onto the Bloch sphere.

    Rank 3 reads (a, b, c) as Cartesian coordinates; rank 2 embeds (a, b) as
    (a, 0, b), so φ is 0 for a >= 0 and π otherwise.
    """
    _check_bloch_rank(x)
    if x.rank == 3:
        return BlochAngles.from_cartesian(x.vectors)
    a, b = x.vectors[:, 0], x.vectors[:, 1]
    theta = np.arccos(np.clip(b, -1.0, 1.0))
    phi = np.where(a >= 0, 0.0, math.pi)
    return BlochAngles(theta, phi)
