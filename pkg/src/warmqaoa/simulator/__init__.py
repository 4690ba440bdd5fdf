"""Exact QAOA simulation (statevector and density matrix) and spectral checks."""

from .models import CostDiagonal, DensityMatrix, MixerSpec, QaoaParams, Statevector
from .noise import (
    apply_single_qubit_kraus,
    phase_damping_channel,
    phase_damping_kraus,
    run_qaoa_noisy,
)
from .spectral import (
    SpectrumPoint,
    eigen_gap,
    interpolated_hamiltonian,
    is_irreducible,
    is_stoquastic,
    mixer_matrix,
    spectrum_profile,
)
from .statevector import (
    QaoaCircuit,
    apply_cost,
    apply_mixer,
    cost_diagonal,
    cut_distribution,
    dump_statevector,
    expectation_cut,
    mixer_from_state,
    mixer_unitary,
    prepare_separable,
    run_qaoa,
    sample_cut_indices,
    sample_cuts,
)

__all__ = [
    "Statevector",
    "DensityMatrix",
    "MixerSpec",
    "QaoaParams",
    "CostDiagonal",
    "QaoaCircuit",
    "prepare_separable",
    "mixer_from_state",
    "mixer_unitary",
    "cost_diagonal",
    "apply_cost",
    "apply_mixer",
    "run_qaoa",
    "expectation_cut",
    "cut_distribution",
    "sample_cut_indices",
    "sample_cuts",
    "dump_statevector",
    "mixer_matrix",
    "interpolated_hamiltonian",
    "eigen_gap",
    "is_stoquastic",
    "is_irreducible",
    "SpectrumPoint",
    "spectrum_profile",
    "phase_damping_kraus",
    "apply_single_qubit_kraus",
    "phase_damping_channel",
    "run_qaoa_noisy",
]
