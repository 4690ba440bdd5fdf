"""
Warm-start data models.

A ``RelaxedSolution`` is a feasible point of the rank-k Burer–Monteiro
relaxation (one unit vector per vertex); ``BlochAngles`` is the separable
quantum state obtained after rotating and mapping such a point onto the
Bloch sphere.
"""

import math
from dataclasses import asdict, dataclass
from typing import Any, Dict, Optional

import numpy as np

from ..errors import InvalidArgumentError

UNIT_TOL = 1e-9
_ANGLE_SLACK = 1e-12


def _optional_float(value: Any) -> Optional[float]:
    return None if value is None else float(value)


@dataclass(frozen=True, eq=False)
class RelaxedSolution:
    """n unit vectors in R^k, stored as the rows of ``vectors``."""

    vectors: np.ndarray
    stationary: bool = True

    def __post_init__(self) -> None:
        vectors = np.array(self.vectors, dtype=float)
        if vectors.ndim != 2 or vectors.shape[0] < 1:
            raise InvalidArgumentError("vectors must be an (n, k) array with n >= 1")
        if vectors.shape[1] < 2:
            raise InvalidArgumentError("relaxed solutions need rank k >= 2")
        norms = np.linalg.norm(vectors, axis=1)
        if np.any(np.abs(norms - 1.0) > UNIT_TOL):
            raise InvalidArgumentError("every vector must have unit norm")
        vectors.setflags(write=False)
        object.__setattr__(self, "vectors", vectors)

    @classmethod
    def from_unnormalized(
        cls, vectors: np.ndarray, stationary: bool = True
    ) -> "RelaxedSolution":
        """Normalize the rows of ``vectors`` and wrap them."""
        vectors = np.asarray(vectors, dtype=float)
        norms = np.linalg.norm(vectors, axis=1, keepdims=True)
        if np.any(norms == 0):
            raise InvalidArgumentError("cannot normalize a zero vector")
        return cls(vectors / norms, stationary=stationary)

    @property
    def n(self) -> int:
        """Number of vectors (vertices)."""
        return int(self.vectors.shape[0])

    @property
    def rank(self) -> int:
        """Ambient dimension k."""
        return int(self.vectors.shape[1])

    def gram(self) -> np.ndarray:
        """Matrix of pairwise inner products."""
        return self.vectors @ self.vectors.T

    def padded(self, rank: int) -> "RelaxedSolution":
        """Embed into R^rank by appending zero coordinates."""
        if rank < self.rank:
            raise InvalidArgumentError("cannot pad to a smaller rank")
        extra = np.zeros((self.n, rank - self.rank))
        return RelaxedSolution(np.hstack([self.vectors, extra]), self.stationary)


@dataclass(frozen=True, eq=False)
class BlochAngles:
    """Per-qubit polar angle θ_j ∈ [0, π] and azimuth φ_j ∈ [0, 2π)."""

    theta: np.ndarray
    phi: np.ndarray

    def __post_init__(self) -> None:
        theta = np.array(self.theta, dtype=float).reshape(-1)
        phi = np.array(self.phi, dtype=float).reshape(-1)
        if theta.shape != phi.shape or theta.size < 1:
            raise InvalidArgumentError("theta and phi must be nonempty, equal length")
        if np.any(theta < -_ANGLE_SLACK) or np.any(theta > math.pi + _ANGLE_SLACK):
            raise InvalidArgumentError("theta must lie in [0, pi]")
        theta = np.clip(theta, 0.0, math.pi)
        phi = np.mod(phi, 2 * math.pi)
        # mod can return exactly 2π for tiny negative inputs
        phi[phi >= 2 * math.pi] = 0.0
        theta.setflags(write=False)
        phi.setflags(write=False)
        object.__setattr__(self, "theta", theta)
        object.__setattr__(self, "phi", phi)

    @classmethod
    def uniform_superposition(cls, n: int) -> "BlochAngles":
        """All qubits at θ = π/2, φ = 0, i.e. the |+⟩^⊗n state."""
        return cls(np.full(n, math.pi / 2), np.zeros(n))

    @classmethod
    def from_cartesian(cls, points: np.ndarray) -> "BlochAngles":
        """Angles of unit vectors (x, y, z) given as rows."""
        points = np.asarray(points, dtype=float)
        theta = np.arccos(np.clip(points[:, 2], -1.0, 1.0))
        phi = np.mod(np.arctan2(points[:, 1], points[:, 0]), 2 * math.pi)
        return cls(theta, phi)

    @property
    def n(self) -> int:
        """Number of qubits."""
        return int(self.theta.size)

    def cartesian(self) -> np.ndarray:
        """Unit vectors (sinθcosφ, sinθsinφ, cosθ) as an (n, 3) array."""
        sin_theta = np.sin(self.theta)
        return np.column_stack(
            [
                sin_theta * np.cos(self.phi),
                sin_theta * np.sin(self.phi),
                np.cos(self.theta),
            ]
        )

    def dephased(self) -> "BlochAngles":
        """Copy with every azimuth set to zero."""
        return BlochAngles(self.theta.copy(), np.zeros(self.n))

    def at_poles(self, tol: float = 1e-12) -> bool:
        """Whether any qubit sits at a pole of the Bloch sphere."""
        return bool(np.any(np.minimum(self.theta, math.pi - self.theta) <= tol))

    def to_dict(self) -> Dict[str, Any]:
        """JSON-ready form."""
        return {"theta": self.theta.tolist(), "phi": self.phi.tolist()}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "BlochAngles":
        """Inverse of ``to_dict``."""
        try:
            return cls(np.asarray(data["theta"]), np.asarray(data["phi"]))
        except KeyError as e:
            raise InvalidArgumentError(f"missing Bloch angle key {e}") from e


@dataclass(frozen=True)
class WarmstartReport:
    """Summary of the warm-start chosen by ``select_warmstart``."""

    method: str
    rank: int
    attempts: int
    bm_objective: float
    hp_expected: float
    kappa_close: Optional[float]
    kappa_approx: Optional[float]
    seed: int
    stationary: bool = True

    def to_dict(self) -> Dict[str, Any]:
        """JSON-ready form with the fixed report keys."""
        return asdict(self)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "WarmstartReport":
        """Inverse of ``to_dict``."""
        try:
            return cls(
                method=str(data["method"]),
                rank=int(data["rank"]),
                attempts=int(data["attempts"]),
                bm_objective=float(data["bm_objective"]),
                hp_expected=float(data["hp_expected"]),
                kappa_close=_optional_float(data["kappa_close"]),
                kappa_approx=_optional_float(data["kappa_approx"]),
                seed=int(data["seed"]),
                stationary=bool(data.get("stationary", True)),
            )
        except (KeyError, TypeError, ValueError) as e:
            raise InvalidArgumentError(f"invalid warm-start report: {e}") from e
