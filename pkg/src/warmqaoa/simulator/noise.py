"""
Density-matrix QAOA with phase damping after every mixer gate.

The dephasing channel on one qubit has Kraus operators
{√(1−q) I, √q |0⟩⟨0|, √q |1⟩⟨1|}: blocks diagonal in that qubit are kept
and the cross blocks are scaled by (1 − q). Cost phases are applied exactly.
"""

import logging
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..config.settings import Settings, resolve_settings
from ..errors import CapacityError, InvalidArgumentError
from ..graphs.models import WeightedGraph
from ..warmstart.models import BlochAngles
from .models import DensityMatrix, MixerSpec, QaoaParams
from .statevector import cost_diagonal, mixer_unitary, prepare_separable

logger = logging.getLogger(__name__)


def _check_density_capacity(n: int, settings: Optional[Settings]) -> None:
    cap = resolve_settings(settings).density_cap
    if n > cap:
        raise CapacityError(
            f"density-matrix simulation limited to n <= {cap}, got n={n}"
        )


def _check_probability(q: float) -> None:
    if not 0.0 <= q <= 1.0:
        raise InvalidArgumentError(f"dephasing probability must lie in [0, 1], got {q}")


def _check_qubit(qubit: int, n: int) -> None:
    if not 0 <= qubit < n:
        raise InvalidArgumentError(f"qubit {qubit} out of range for n={n}")


def phase_damping_kraus(q: float) -> List[np.ndarray]:
    """Kraus operators of the single-qubit dephasing channel."""
    _check_probability(q)
    return [
        np.sqrt(1.0 - q) * np.eye(2, dtype=complex),
        np.sqrt(q) * np.diag([1.0, 0.0]).astype(complex),
        np.sqrt(q) * np.diag([0.0, 1.0]).astype(complex),
    ]


def _left(rho: np.ndarray, n: int, qubit: int, op: np.ndarray) -> np.ndarray:
    dim = rho.shape[0]
    view = rho.reshape(2 ** (n - 1 - qubit), 2, 2**qubit, dim)
    return np.einsum("ab,ibkc->iakc", op, view).reshape(dim, dim)


def _right_adjoint(rho: np.ndarray, n: int, qubit: int, op: np.ndarray) -> np.ndarray:
    """ρ · op† on the column index."""
    dim = rho.shape[0]
    view = rho.reshape(dim, 2 ** (n - 1 - qubit), 2, 2**qubit)
    return np.einsum("ab,cibk->ciak", op.conj(), view).reshape(dim, dim)


def _conjugate(rho: np.ndarray, n: int, qubit: int, op: np.ndarray) -> np.ndarray:
    return _right_adjoint(_left(rho, n, qubit, op), n, qubit, op)


def apply_single_qubit_kraus(
    rho: DensityMatrix, qubit: int, kraus: Sequence[np.ndarray]
) -> DensityMatrix:
    """Σ_k K_k ρ K_k† with every K_k acting on ``qubit``."""
    _check_qubit(qubit, rho.n)
    matrix = np.array(rho.matrix)
    result = sum(
        _conjugate(matrix, rho.n, qubit, np.asarray(k, dtype=complex)) for k in kraus
    )
    return DensityMatrix(result)


def _dephase(rho: np.ndarray, n: int, qubit: int, q: float) -> np.ndarray:
    outer, inner = 2 ** (n - 1 - qubit), 2**qubit
    view = rho.reshape(outer, 2, inner, outer, 2, inner)
    view[:, 0, :, :, 1, :] *= 1.0 - q
    view[:, 1, :, :, 0, :] *= 1.0 - q
    return view.reshape(rho.shape)


def phase_damping_channel(
    rho: DensityMatrix, qubit: int, q: float, settings: Optional[Settings] = None
) -> DensityMatrix:
    """
    Dephase ``qubit`` with probability ``q``.

    Raises:
        InvalidArgumentError: If ``q`` or ``qubit`` is out of range.
        CapacityError: If ``rho.n`` exceeds the density-matrix cap.
    """
    _check_probability(q)
    _check_qubit(qubit, rho.n)
    _check_density_capacity(rho.n, settings)
    return DensityMatrix(_dephase(np.array(rho.matrix), rho.n, qubit, q))


def run_qaoa_noisy(
    g: WeightedGraph,
    s: BlochAngles,
    m: MixerSpec,
    params: QaoaParams,
    q: float,
    settings: Optional[Settings] = None,
) -> Tuple[DensityMatrix, float]:
    """
    Evolve ρ = |s_0⟩⟨s_0| through the QAOA circuit with dephasing noise.

    Each per-qubit mixer rotation is followed by ``phase_damping_channel``
    on that qubit.

    Returns:
        The final density matrix and its expected cut tr(ρ · diag(d)).
    """
    _check_probability(q)
    if s.n != g.n or m.n != g.n:
        raise InvalidArgumentError(
            f"graph, state and mixer sizes differ: {g.n}, {s.n}, {m.n}"
        )
    _check_density_capacity(g.n, settings)
    n = g.n
    initial = prepare_separable(s, settings).amplitudes
    diagonal = cost_diagonal(g, settings).values
    rho = np.outer(initial, initial.conj())
    for gamma, beta in zip(params.gamma, params.beta):
        phases = np.exp(-1j * gamma * diagonal)
        rho = rho * np.outer(phases, phases.conj())
        for qubit, axis in enumerate(m.axes):
            rho = _conjugate(rho, n, qubit, mixer_unitary(axis, beta))
            if q > 0.0:
                rho = _dephase(rho, n, qubit, q)
    expected = float(np.real(np.diag(rho)) @ diagonal)
    logger.debug(
        "Noisy run n=%d p=%d q=%g: expected cut %.10g", n, params.p, q, expected
    )
    return DensityMatrix(rho), expected
