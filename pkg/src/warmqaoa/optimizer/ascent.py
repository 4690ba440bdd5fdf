"""
Variational optimization of F_p(γ, β).

Gradient ascent with central finite differences and a backtracking line
search. A run stops when an accepted step gains less than W̄ × tol_factor,
when the line search cannot improve any more, or after ``max_iters`` steps.
The first rule marks the result converged; an exhausted line search does so
only while the gradient norm is at most 10 × fd_step × W̄.

An accepted step of length t gains at least c·t·|∇F|², with c = 0.1, so the
gradient left behind by a converged run shrinks with tol_factor.
"""

import logging
import math
from dataclasses import dataclass, replace
from typing import Optional, Tuple

import numpy as np

from ..config.settings import Settings
from ..errors import InvalidArgumentError
from ..graphs.models import WeightedGraph
from ..simulator.models import MixerSpec, QaoaParams
from ..simulator.statevector import QaoaCircuit
from ..utils.seeding import as_generator, derive_seed
from ..warmstart.models import BlochAngles
from .models import OptConfig, OptResult

logger = logging.getLogger(__name__)

_ARMIJO = 0.1
_MIN_STEP = 1e-12
_MAX_STEP = 1e2


def _weight_scale(g: WeightedGraph) -> float:
    scale = g.absolute_weight
    return scale if scale > 0 else 1.0


def _gradient(circuit: QaoaCircuit, x: np.ndarray, h: float) -> np.ndarray:
    grad = np.zeros_like(x)
    for i in range(x.size):
        offset = np.zeros_like(x)
        offset[i] = h
        upper = circuit.expectation(QaoaParams.from_vector(x + offset))
        lower = circuit.expectation(QaoaParams.from_vector(x - offset))
        grad[i] = (upper - lower) / (2 * h)
    return grad


def ascend(
    circuit: QaoaCircuit,
    p: int,
    cfg: OptConfig,
    initial: Optional[QaoaParams] = None,
) -> OptResult:
    """Run the ascent on a prepared circuit; see ``optimize``."""
    if p < 0:
        raise InvalidArgumentError("depth must be nonnegative")
    if p == 0:
        value = circuit.expectation(QaoaParams.zeros(0))
        return OptResult(QaoaParams.zeros(0), value, (value,), True, 0)

    if initial is not None:
        if initial.p != p:
            raise InvalidArgumentError(
                f"initial parameters have depth {initial.p}, not {p}"
            )
        x = initial.to_vector()
    else:
        x = as_generator(cfg.seed).uniform(0.0, cfg.init_scale, size=2 * p)

    scale = _weight_scale(circuit.graph)
    value_tol = scale * cfg.termination_tol_factor
    grad_tol = 10.0 * cfg.fd_step * scale

    value = circuit.expectation(QaoaParams.from_vector(x))
    trace = [value]
    step = 1.0
    last_gain = math.inf
    converged = False
    iterations = 0
    while iterations < cfg.max_iters:
        if last_gain < value_tol:
            converged = True
            break
        grad = _gradient(circuit, x, cfg.fd_step)
        grad_norm = float(np.linalg.norm(grad))
        if grad_norm == 0.0:
            converged = True
            break

        accepted = False
        while step > _MIN_STEP:
            candidate = x + step * grad
            candidate_value = circuit.expectation(QaoaParams.from_vector(candidate))
            if candidate_value >= value + _ARMIJO * step * grad_norm**2:
                accepted = True
                break
            step *= 0.5
        if not accepted:
            converged = grad_norm <= grad_tol
            logger.debug(
                "Line search exhausted at F=%.10g, |grad|=%.3g", value, grad_norm
            )
            break

        iterations += 1
        last_gain = candidate_value - value
        x, value = candidate, candidate_value
        trace.append(value)
        step = min(2.0 * step, _MAX_STEP)
        logger.debug("iteration %d: F=%.10g step=%.3g", iterations, value, step)

    if iterations >= cfg.max_iters:
        logger.warning(
            "Optimizer reached max_iters=%d at depth %d (F=%.6g)",
            cfg.max_iters,
            p,
            value,
        )
    return OptResult(
        params=QaoaParams.from_vector(x),
        best_value=max(trace),
        trace=tuple(trace),
        converged=converged,
        iterations=iterations,
    )


def ascend_multistart(
    circuit: QaoaCircuit,
    p: int,
    starts: int,
    cfg: OptConfig,
    initial: Optional[QaoaParams] = None,
) -> OptResult:
    """Best of ``starts`` ascents on a prepared circuit; see ``multistart``."""
    if starts < 1:
        raise InvalidArgumentError("starts must be >= 1")
    best = ascend(circuit, p, cfg, initial)
    for start in range(1, starts):
        result = ascend(circuit, p, replace(cfg, seed=derive_seed(cfg.seed, start)))
        if result.best_value > best.best_value:
            best = result
    return best


def optimize(
    g: WeightedGraph,
    s: BlochAngles,
    m: MixerSpec,
    p: int,
    cfg: Optional[OptConfig] = None,
    initial: Optional[QaoaParams] = None,
    settings: Optional[Settings] = None,
) -> OptResult:
    """
    Maximize F_p(γ, β) for the given initial state and mixer.

    Args:
        g: Max-Cut instance.
        s: Initial product state.
        m: Mixer axes.
        p: Circuit depth; depth 0 returns the initial-state expectation.
        cfg: Optimizer settings (defaults when omitted).
        initial: Starting angles; drawn from Uniform[0, init_scale] when omitted.

    Returns:
        OptResult: Non-convergence is reported through ``converged``.
    """
    circuit = QaoaCircuit(g, s, m, settings)
    return ascend(circuit, p, cfg or OptConfig(), initial)


def multistart(
    g: WeightedGraph,
    s: BlochAngles,
    m: MixerSpec,
    p: int,
    starts: int,
    cfg: Optional[OptConfig] = None,
    initial: Optional[QaoaParams] = None,
    settings: Optional[Settings] = None,
) -> OptResult:
    """
    Best of ``starts`` independent ascents.

    Start 0 is exactly ``optimize(g, s, m, p, cfg, initial)``; start i > 0
    draws fresh angles with ``derive_seed(cfg.seed, i)``.
    """
    circuit = QaoaCircuit(g, s, m, settings)
    return ascend_multistart(circuit, p, starts, cfg or OptConfig(), initial)


@dataclass(frozen=True, eq=False)
class SweepGrid:
    """F_1 on a γ × β grid; ``values[i, j]`` is at (γ_j, β_i)."""

    gammas: np.ndarray
    betas: np.ndarray
    values: np.ndarray

    def best(self) -> Tuple[float, float, float]:
        """(γ, β, F_1) at the largest grid value."""
        i, j = np.unravel_index(int(np.argmax(self.values)), self.values.shape)
        return float(self.gammas[j]), float(self.betas[i]), float(self.values[i, j])


def sweep_grid(
    g: WeightedGraph,
    s: BlochAngles,
    m: MixerSpec,
    gamma_range: Tuple[float, float] = (0.0, math.pi),
    beta_range: Tuple[float, float] = (0.0, math.pi),
    resolution: int = 21,
    settings: Optional[Settings] = None,
) -> SweepGrid:
    """
    Evaluate F_1 on a resolution × resolution grid, endpoints included.

    Raises:
        InvalidArgumentError: If ``resolution`` < 2.
    """
    if resolution < 2:
        raise InvalidArgumentError("resolution must be >= 2")
    circuit = QaoaCircuit(g, s, m, settings)
    gammas = np.linspace(gamma_range[0], gamma_range[1], resolution)
    betas = np.linspace(beta_range[0], beta_range[1], resolution)
    values = np.array(
        [
            [circuit.expectation(QaoaParams((gamma,), (beta,))) for gamma in gammas]
            for beta in betas
        ]
    )
    return SweepGrid(gammas, betas, values)
