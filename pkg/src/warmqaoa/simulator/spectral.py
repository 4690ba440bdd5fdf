"""
Dense spectral tools for the interpolated Hamiltonian H(t).

These build full 2^n × 2^n matrices and are meant for verification on
small instances only, hence the separate (smaller) dense cap.
"""

import logging
from dataclasses import dataclass
from typing import Iterable, List, Optional

import numpy as np
import scipy.linalg
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from ..config.settings import Settings, resolve_settings
from ..errors import CapacityError, InvalidArgumentError
from .models import CostDiagonal, MixerSpec
from .statevector import PAULI_X, PAULI_Y, PAULI_Z

logger = logging.getLogger(__name__)

ENTRY_TOL = Settings().entry_tol
HERMITIAN_TOL = Settings().norm_tol


def _check_dense_capacity(n: int, settings: Optional[Settings]) -> None:
    cap = resolve_settings(settings).dense_cap
    if n > cap:
        raise CapacityError(f"dense matrices limited to n <= {cap}, got n={n}")


def mixer_matrix(m: MixerSpec, settings: Optional[Settings] = None) -> np.ndarray:
    """
    Kronecker sum H_B = Σ_j I ⊗ … ⊗ H_B,j ⊗ … ⊗ I.

    Qubit j sits at position j from the right, matching the simulator.

    Raises:
        CapacityError: If ``m.n`` exceeds the dense cap.
    """
    _check_dense_capacity(m.n, settings)
    dim = 2**m.n
    h = np.zeros((dim, dim), dtype=complex)
    for j, (x, y, z) in enumerate(m.axes):
        local = x * PAULI_X + y * PAULI_Y + z * PAULI_Z
        h += np.kron(np.kron(np.eye(2 ** (m.n - 1 - j)), local), np.eye(2**j))
    return h


def interpolated_hamiltonian(
    m: MixerSpec, d: CostDiagonal, t_frac: float, settings: Optional[Settings] = None
) -> np.ndarray:
    """H(t) = (1 − t)·H_B + t·diag(d) for t in [0, 1]."""
    if not 0.0 <= t_frac <= 1.0:
        raise InvalidArgumentError(f"t_frac must lie in [0, 1], got {t_frac}")
    if m.n != d.n:
        raise InvalidArgumentError(
            f"mixer has {m.n} qubits but cost diagonal has {d.n}"
        )
    return (1.0 - t_frac) * mixer_matrix(m, settings) + t_frac * np.diag(
        d.values.astype(complex)
    )


def eigen_gap(h: np.ndarray) -> float:
    """
    Gap λ_1 − λ_2 between the two largest eigenvalues (with multiplicity).

    Raises:
        InvalidArgumentError: If ``h`` is not a Hermitian matrix of size >= 2.
    """
    h = np.asarray(h)
    if h.ndim != 2 or h.shape[0] != h.shape[1] or h.shape[0] < 2:
        raise InvalidArgumentError("eigen_gap needs a square matrix of size >= 2")
    if not np.allclose(h, h.conj().T, rtol=0.0, atol=HERMITIAN_TOL):
        raise InvalidArgumentError("eigen_gap needs a Hermitian matrix")
    eigenvalues = scipy.linalg.eigvalsh(h)
    return float(eigenvalues[-1] - eigenvalues[-2])


def is_stoquastic(h: np.ndarray, tol: float = ENTRY_TOL) -> bool:
    """Real entries and nonnegative off-diagonal entries, both up to ``tol``."""
    h = np.asarray(h)
    if np.any(np.abs(np.imag(h)) >= tol):
        return False
    off_diagonal = np.real(h) - np.diag(np.diag(np.real(h)))
    return bool(np.all(off_diagonal >= -tol))


def is_irreducible(h: np.ndarray, tol: float = ENTRY_TOL) -> bool:
    """Whether the off-diagonal pattern |h_ij| > tol is strongly connected."""
    h = np.asarray(h)
    pattern = np.abs(h) > tol
    np.fill_diagonal(pattern, False)
    count, _ = connected_components(
        csr_matrix(pattern), directed=True, connection="strong"
    )
    return bool(count == 1)


@dataclass(frozen=True)
class SpectrumPoint:
    """Spectral checks of H(t) at one interpolation time."""

    t: float
    gap: float
    stoquastic: bool
    irreducible: bool

    def to_dict(self) -> dict:
        return {
            "t": self.t,
            "gap": self.gap,
            "stoquastic": self.stoquastic,
            "irreducible": self.irreducible,
        }


def spectrum_profile(
    m: MixerSpec,
    d: CostDiagonal,
    t_values: Iterable[float],
    settings: Optional[Settings] = None,
) -> List[SpectrumPoint]:
    """Gap, stoquasticity and irreducibility of H(t) along a t-grid."""
    _check_dense_capacity(m.n, settings)
    points = []
    for t in t_values:
        h = interpolated_hamiltonian(m, d, float(t), settings)
        point = SpectrumPoint(
            float(t), eigen_gap(h), is_stoquastic(h), is_irreducible(h)
        )
        logger.debug("H(%.3f): gap %.6g", point.t, point.gap)
        points.append(point)
    return points
