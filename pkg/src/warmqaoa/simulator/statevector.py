"""
Exact statevector simulation of QAOA with per-qubit custom mixers.

The circuit is e^{-iβ_p H_B} e^{-iγ_p H_C} ⋯ e^{-iβ_1 H_B} e^{-iγ_1 H_C} |s_0⟩,
where |s_0⟩ is a product state and H_B = Σ_j (x_jσ^x_j + y_jσ^y_j + z_jσ^z_j).
Single-qubit gates act on a (2^(n-1-j), 2, 2^j) view of the amplitudes.
"""

import functools
import logging
from typing import List, Optional

import numpy as np

from ..config.settings import Settings, resolve_settings
from ..errors import CapacityError, InvalidArgumentError
from ..graphs.models import Cut, WeightedGraph
from ..graphs.oracles import cut_values_for_indices
from ..utils.seeding import SeedLike, as_generator
from ..warmstart.models import BlochAngles
from .models import CostDiagonal, MixerSpec, QaoaParams, Statevector

logger = logging.getLogger(__name__)

IDENTITY = np.eye(2, dtype=complex)
PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)


def check_statevector_capacity(n: int, settings: Optional[Settings] = None) -> None:
    cap = resolve_settings(settings).statevector_cap
    if n > cap:
        raise CapacityError(f"statevector simulation limited to n <= {cap}, got n={n}")


def qubit_state(theta: float, phi: float) -> np.ndarray:
    """cos(θ/2)|0⟩ + e^{iφ} sin(θ/2)|1⟩."""
    return np.array([np.cos(theta / 2), np.exp(1j * phi) * np.sin(theta / 2)])


def prepare_separable(
    s: BlochAngles, settings: Optional[Settings] = None
) -> Statevector:
    """
    Product state of the qubits described by ``s``.

    Raises:
        CapacityError: If ``s.n`` exceeds the statevector cap.
    """
    check_statevector_capacity(s.n, settings)
    factors = [qubit_state(t, p) for t, p in zip(s.theta, s.phi)]
    # Qubit 0 is the rightmost Kronecker factor.
    return Statevector(functools.reduce(np.kron, reversed(factors)))


def mixer_from_state(s: BlochAngles) -> MixerSpec:
    return MixerSpec.from_state(s)


def cost_diagonal(
    g: WeightedGraph, settings: Optional[Settings] = None
) -> CostDiagonal:
    """
    Cut value of every basis state, via per-edge bit tests.

    Raises:
        CapacityError: If ``g.n`` exceeds the statevector cap.
    """
    check_statevector_capacity(g.n, settings)
    indices = np.arange(2**g.n, dtype=np.int64)
    return CostDiagonal(cut_values_for_indices(g, indices))


def mixer_unitary(axis: np.ndarray, beta: float) -> np.ndarray:
    """exp(-iβ n̂·σ) = cos β I − i sin β (xσ^x + yσ^y + zσ^z)."""
    x, y, z = axis
    generator = x * PAULI_X + y * PAULI_Y + z * PAULI_Z
    return np.cos(beta) * IDENTITY - 1j * np.sin(beta) * generator


def apply_single_qubit(
    amplitudes: np.ndarray, n: int, qubit: int, unitary: np.ndarray
) -> np.ndarray:
    """Apply a 2×2 matrix to ``qubit`` of an n-qubit amplitude vector."""
    view = amplitudes.reshape(2 ** (n - 1 - qubit), 2, 2**qubit)
    return np.einsum("ab,ibk->iak", unitary, view).reshape(-1)


def _check_sizes(n_state: int, n_other: int, what: str) -> None:
    if n_state != n_other:
        raise InvalidArgumentError(
            f"{what} has {n_other} qubits but state has {n_state}"
        )


def apply_cost(sv: Statevector, d: CostDiagonal, gamma: float) -> Statevector:
    """a_b ← e^{-iγ d(b)} a_b."""
    _check_sizes(sv.n, d.n, "cost diagonal")
    return Statevector(np.exp(-1j * gamma * d.values) * sv.amplitudes)


def _mix(amplitudes: np.ndarray, m: MixerSpec, beta: float) -> np.ndarray:
    for qubit, axis in enumerate(m.axes):
        unitary = mixer_unitary(axis, beta)
        amplitudes = apply_single_qubit(amplitudes, m.n, qubit, unitary)
    return amplitudes


def apply_mixer(sv: Statevector, m: MixerSpec, beta: float) -> Statevector:
    """Apply e^{-iβ H_B}, one commuting single-qubit rotation per qubit."""
    _check_sizes(sv.n, m.n, "mixer")
    return Statevector(_mix(sv.amplitudes, m, beta))


class QaoaCircuit:
    """
    A fixed instance, initial state and mixer, evaluated at many angles.

    The cost diagonal and initial amplitudes are computed once, which is
    what the optimizer and grid sweeps need.
    """

    def __init__(
        self,
        g: WeightedGraph,
        s: BlochAngles,
        m: MixerSpec,
        settings: Optional[Settings] = None,
    ):
        if s.n != g.n or m.n != g.n:
            raise InvalidArgumentError(
                f"graph, state and mixer sizes differ: {g.n}, {s.n}, {m.n}"
            )
        self.graph = g
        self.initial = prepare_separable(s, settings)
        self.diagonal = cost_diagonal(g, settings)
        self.mixer = m

    @property
    def n(self) -> int:
        return self.graph.n

    def amplitudes(self, params: QaoaParams) -> np.ndarray:
        amplitudes = np.array(self.initial.amplitudes)
        for gamma, beta in zip(params.gamma, params.beta):
            amplitudes = np.exp(-1j * gamma * self.diagonal.values) * amplitudes
            amplitudes = _mix(amplitudes, self.mixer, beta)
        return amplitudes

    def state(self, params: QaoaParams) -> Statevector:
        return Statevector(self.amplitudes(params))

    def expectation(self, params: QaoaParams) -> float:
        """F_p(γ, β)."""
        probs = np.abs(self.amplitudes(params)) ** 2
        return float(probs @ self.diagonal.values)


def run_qaoa(
    g: WeightedGraph,
    s: BlochAngles,
    m: MixerSpec,
    params: QaoaParams,
    settings: Optional[Settings] = None,
) -> Statevector:
    """Final state |ψ_p(γ, β)⟩; depth 0 returns the prepared product state."""
    return QaoaCircuit(g, s, m, settings).state(params)


def expectation_cut(sv: Statevector, d: CostDiagonal) -> float:
    """Σ_b |a_b|² d(b)."""
    _check_sizes(sv.n, d.n, "cost diagonal")
    return float(sv.probabilities() @ d.values)


def cut_distribution(sv: Statevector) -> np.ndarray:
    """Exact probability of each basis-state cut."""
    return sv.probabilities()


def sample_cut_indices(
    sv: Statevector, shots: int, seed: SeedLike = None
) -> np.ndarray:
    """Basis indices of ``shots`` independent measurements."""
    if shots < 0:
        raise InvalidArgumentError("shots must be nonnegative")
    rng = as_generator(seed)
    probs = sv.probabilities()
    return rng.choice(probs.size, size=shots, p=probs)


def sample_cuts(sv: Statevector, shots: int, seed: SeedLike = None) -> List[Cut]:
    return [Cut.from_index(int(i), sv.n) for i in sample_cut_indices(sv, shots, seed)]


def dump_statevector(sv: Statevector) -> bytes:
    return sv.to_bytes()
