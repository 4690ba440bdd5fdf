"""
Simulator data models.

Bit convention: basis index ``b`` holds qubit ``j`` in bit ``j``, so qubit 0
is the least significant bit and the rightmost factor of every Kronecker
product built in this package.
"""

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from ..config.settings import Settings
from ..errors import InvalidArgumentError
from ..warmstart.models import BlochAngles

_TOLERANCES = Settings()


def _qubit_count(size: int, what: str) -> int:
    n = int(size).bit_length() - 1
    if size < 2 or 2**n != size:
        raise InvalidArgumentError(f"{what} length must be 2^n with n >= 1, got {size}")
    return n


def _frozen(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class Statevector:
    """Normalized amplitudes of an n-qubit pure state."""

    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        amplitudes = np.array(self.amplitudes, dtype=complex).reshape(-1)
        _qubit_count(amplitudes.size, "statevector")
        norm = float(np.vdot(amplitudes, amplitudes).real)
        if abs(norm - 1.0) > _TOLERANCES.norm_tol:
            raise InvalidArgumentError(f"statevector norm² is {norm:.12g}, expected 1")
        object.__setattr__(self, "amplitudes", _frozen(amplitudes))

    @property
    def n(self) -> int:
        return _qubit_count(self.amplitudes.size, "statevector")

    def probabilities(self) -> np.ndarray:
        """Born-rule probabilities |a_b|², renormalized to sum to one."""
        probs = np.abs(self.amplitudes) ** 2
        return probs / probs.sum()

    def to_bytes(self) -> bytes:
        """Little-endian float64 (re, im) pairs in basis order."""
        return np.asarray(self.amplitudes, dtype="<c16").tobytes()


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Hermitian, unit-trace 2^n × 2^n matrix."""

    matrix: np.ndarray

    def __post_init__(self) -> None:
        matrix = np.array(self.matrix, dtype=complex)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise InvalidArgumentError("density matrix must be square")
        _qubit_count(matrix.shape[0], "density matrix")
        trace = complex(np.trace(matrix))
        if abs(trace - 1.0) > _TOLERANCES.norm_tol:
            raise InvalidArgumentError(
                f"density matrix trace is {trace:.12g}, expected 1"
            )
        hermitian_error = np.max(np.abs(matrix - matrix.conj().T))
        if hermitian_error > _TOLERANCES.norm_tol:
            raise InvalidArgumentError("density matrix must be Hermitian")
        object.__setattr__(self, "matrix", _frozen(matrix))

    @classmethod
    def from_statevector(cls, sv: Statevector) -> "DensityMatrix":
        """Pure state |ψ⟩⟨ψ|."""
        return cls(np.outer(sv.amplitudes, sv.amplitudes.conj()))

    @property
    def n(self) -> int:
        return _qubit_count(self.matrix.shape[0], "density matrix")

    def probabilities(self) -> np.ndarray:
        """Diagonal of ρ as real probabilities."""
        return np.clip(np.real(np.diag(self.matrix)), 0.0, None)

    def is_positive(self, tol: float = _TOLERANCES.psd_tol) -> bool:
        """Whether the smallest eigenvalue is at least ``-tol``."""
        return bool(np.linalg.eigvalsh(self.matrix)[0] >= -tol)


@dataclass(frozen=True, eq=False)
class MixerSpec:
    """Per-qubit rotation axes n̂_j; H_B,j = x_jσ^x + y_jσ^y + z_jσ^z."""

    axes: np.ndarray

    def __post_init__(self) -> None:
        axes = np.array(self.axes, dtype=float)
        if axes.ndim != 2 or axes.shape[1] != 3 or axes.shape[0] < 1:
            raise InvalidArgumentError("mixer axes must be an (n, 3) array with n >= 1")
        norms = np.linalg.norm(axes, axis=1)
        if np.any(np.abs(norms - 1.0) > _TOLERANCES.unit_tol):
            raise InvalidArgumentError("every mixer axis must have unit norm")
        object.__setattr__(self, "axes", _frozen(axes))

    @classmethod
    def from_state(cls, s: BlochAngles) -> "MixerSpec":
        """Axes through each qubit's initial Bloch vector."""
        return cls(s.cartesian())

    @classmethod
    def standard(cls, n: int) -> "MixerSpec":
        """The transverse-field mixer Σ σ^x_j."""
        axes = np.zeros((n, 3))
        axes[:, 0] = 1.0
        return cls(axes)

    @property
    def n(self) -> int:
        return int(self.axes.shape[0])


@dataclass(frozen=True)
class QaoaParams:
    """Angles γ = (γ_1..γ_p) and β = (β_1..β_p)."""

    gamma: Tuple[float, ...]
    beta: Tuple[float, ...]

    def __post_init__(self) -> None:
        gamma = tuple(float(x) for x in self.gamma)
        beta = tuple(float(x) for x in self.beta)
        if len(gamma) != len(beta):
            raise InvalidArgumentError(
                f"gamma and beta lengths differ: {len(gamma)} != {len(beta)}"
            )
        object.__setattr__(self, "gamma", gamma)
        object.__setattr__(self, "beta", beta)

    @classmethod
    def zeros(cls, p: int) -> "QaoaParams":
        if p < 0:
            raise InvalidArgumentError("depth must be nonnegative")
        return cls((0.0,) * p, (0.0,) * p)

    @classmethod
    def from_vector(cls, vector: Sequence[float]) -> "QaoaParams":
        """Inverse of ``to_vector``: first half γ, second half β."""
        values = [float(x) for x in vector]
        if len(values) % 2:
            raise InvalidArgumentError("parameter vector length must be even")
        p = len(values) // 2
        return cls(tuple(values[:p]), tuple(values[p:]))

    @property
    def p(self) -> int:
        return len(self.gamma)

    def to_vector(self) -> np.ndarray:
        return np.array(self.gamma + self.beta, dtype=float)

    def extended(
        self,
        p: int,
        rng: Optional[np.random.Generator] = None,
        scale: float = 0.0,
    ) -> "QaoaParams":
        """
        Pad to depth ``p``.

        Without ``rng`` the appended layers are zero and act as the identity;
        with it they are drawn from Uniform[0, scale].
        """
        if p < self.p:
            raise InvalidArgumentError(f"cannot extend depth {self.p} down to {p}")
        if rng is None:
            pad: Tuple[float, ...] = (0.0,) * (p - self.p)
            return QaoaParams(self.gamma + pad, self.beta + pad)
        gamma_pad = tuple(rng.uniform(0.0, scale, size=p - self.p))
        beta_pad = tuple(rng.uniform(0.0, scale, size=p - self.p))
        return QaoaParams(self.gamma + gamma_pad, self.beta + beta_pad)

    def to_dict(self) -> dict:
        return {"gamma": list(self.gamma), "beta": list(self.beta)}


@dataclass(frozen=True, eq=False)
class CostDiagonal:
    """Cut value of every basis state; entry b is the cut encoded by b."""

    values: np.ndarray

    def __post_init__(self) -> None:
        values = np.array(self.values, dtype=float).reshape(-1)
        _qubit_count(values.size, "cost diagonal")
        object.__setattr__(self, "values", _frozen(values))

    @property
    def n(self) -> int:
        return _qubit_count(self.values.size, "cost diagonal")
