"""Tests for the density-matrix simulator with phase damping."""

import numpy as np
import pytest

from tests.utils import random_density
from warmqaoa.config.settings import Settings
from warmqaoa.errors import CapacityError, InvalidArgumentError
from warmqaoa.graphs.generators import WeightLaw, generate_erdos_renyi
from warmqaoa.optimizer.ascent import optimize
from warmqaoa.optimizer.models import OptConfig
from warmqaoa.simulator.models import DensityMatrix, MixerSpec, QaoaParams
from warmqaoa.simulator.noise import (
    apply_single_qubit_kraus,
    phase_damping_channel,
    phase_damping_kraus,
    run_qaoa_noisy,
)
from warmqaoa.simulator.statevector import QaoaCircuit, prepare_separable, run_qaoa
from warmqaoa.warmstart.bloch import random_bloch_angles
from warmqaoa.warmstart.models import BlochAngles


def test_kraus_completeness():
    kraus = phase_damping_kraus(0.3)
    total = sum(k.conj().T @ k for k in kraus)
    assert np.allclose(total, np.eye(2))


@pytest.mark.parametrize("q", [0.0, 0.03, 0.5, 1.0])
def test_single_qubit_coherence_scales(q):
    """Off-diagonal entries shrink by exactly (1 − q) per application."""
    rho = DensityMatrix.from_statevector(
        prepare_separable(BlochAngles.uniform_superposition(1))
    )
    once = phase_damping_channel(rho, 0, q)
    twice = phase_damping_channel(once, 0, q)
    assert once.matrix[0, 1] == pytest.approx(0.5 * (1 - q))
    assert twice.matrix[0, 1] == pytest.approx(0.5 * (1 - q) ** 2)
    assert once.matrix[0, 0] == pytest.approx(0.5)


@pytest.mark.parametrize("qubit", [0, 1, 2])
def test_channel_matches_kraus_sum(qubit):
    rho = DensityMatrix(random_density(3, seed=qubit))
    direct = phase_damping_channel(rho, qubit, 0.2)
    via_kraus = apply_single_qubit_kraus(rho, qubit, phase_damping_kraus(0.2))
    assert np.allclose(direct.matrix, via_kraus.matrix)


def test_channel_keeps_state_physical():
    rho = DensityMatrix(random_density(2, seed=7))
    out = phase_damping_channel(rho, 1, 0.4)
    assert out.is_positive()
    assert np.trace(out.matrix).real == pytest.approx(1.0)


def test_invalid_channel_arguments():
    rho = DensityMatrix(random_density(2))
    with pytest.raises(InvalidArgumentError):
        phase_damping_channel(rho, 0, 1.5)
    with pytest.raises(InvalidArgumentError):
        phase_damping_channel(rho, 2, 0.1)


def test_noiseless_run_matches_statevector(er_graph):
    s = random_bloch_angles(er_graph.n, seed=2)
    m = MixerSpec.from_state(s)
    params = QaoaParams((0.4, -0.7), (0.3, 1.1))
    rho, expected = run_qaoa_noisy(er_graph, s, m, params, 0.0)
    sv = run_qaoa(er_graph, s, m, params)
    assert np.allclose(
        rho.matrix, np.outer(sv.amplitudes, sv.amplitudes.conj()), atol=1e-10
    )
    assert expected == pytest.approx(
        QaoaCircuit(er_graph, s, m).expectation(params), abs=1e-10
    )


def test_noisy_run_is_physical(triangle):
    s = BlochAngles.uniform_superposition(3)
    rho, expected = run_qaoa_noisy(
        triangle, s, MixerSpec.standard(3), QaoaParams((0.5,), (0.3,)), 0.2
    )
    assert rho.is_positive()
    assert 0.0 <= expected <= 2.0


def test_density_capacity(triangle):
    s = BlochAngles.uniform_superposition(3)
    with pytest.raises(CapacityError):
        run_qaoa_noisy(
            triangle,
            s,
            MixerSpec.standard(3),
            QaoaParams.zeros(1),
            0.1,
            Settings(density_cap=2),
        )


@pytest.mark.slow
def test_dephasing_lowers_mean_cut():
    """
    At q=0-optimal angles, q=0.03 does not raise the mean expected cut.

    Depth 2 is the shallowest circuit where dephasing matters: at depth 1
    it acts after the last mixer gate and commutes with the measurement.
    """
    ideal, noisy = [], []
    for seed in range(20):
        g = generate_erdos_renyi(6, 0.5, WeightLaw.parse("unit"), seed=seed)
        s = BlochAngles.uniform_superposition(6)
        m = MixerSpec.standard(6)
        result = optimize(g, s, m, 2, OptConfig(seed=seed))
        ideal.append(result.best_value)
        noisy.append(run_qaoa_noisy(g, s, m, result.params, 0.03)[1])
    assert np.mean(noisy) <= np.mean(ideal) + 1e-12


def test_depth_one_dephasing_is_invisible(er_graph):
    """Dephasing after the final mixer gates leaves the cut distribution alone."""
    s = random_bloch_angles(er_graph.n, seed=9)
    m = MixerSpec.from_state(s)
    params = QaoaParams((0.8,), (0.4,))
    ideal = QaoaCircuit(er_graph, s, m).expectation(params)
    _, noisy = run_qaoa_noisy(er_graph, s, m, params, 0.5)
    assert noisy == pytest.approx(ideal, abs=1e-10)
