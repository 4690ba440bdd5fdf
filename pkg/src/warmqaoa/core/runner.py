"""
Experiment runner for warmqaoa.

This module turns an ``ExperimentSpec`` into result rows: it builds the
instance, constructs each variant's initial states and mixers, optimizes
every requested depth and normalizes the expectations into approximation
ratios.
"""

import logging
import time
from typing import Any, Dict, List, Optional, Sequence, Tuple

from ..config.models import ExperimentSpec
from ..config.settings import Settings
from ..errors import CapacityError, WarmQaoaError
from ..graphs.edgelist import read_graph
from ..graphs.generators import WeightLaw, generate_erdos_renyi, generate_karloff
from ..graphs.models import CutExtremes, WeightedGraph
from ..graphs.oracles import approximation_ratio, brute_force_extremes
from ..optimizer.ascent import ascend, ascend_multistart
from ..optimizer.models import OptConfig, OptResult
from ..simulator.models import MixerSpec
from ..simulator.noise import run_qaoa_noisy
from ..simulator.statevector import QaoaCircuit
from ..utils.seeding import as_generator, derive_seed
from ..warmstart.bloch import random_bloch_angles, single_cut_epsilon_state
from ..warmstart.models import BlochAngles
from ..warmstart.relaxation import (
    best_hyperplane_cut,
    hyperplane_expected_cut,
    sdp_solve,
)
from ..warmstart.selection import select_warmstart
from .formatter import ResultRow, sort_rows

logger = logging.getLogger(__name__)

GW_ROUNDING_TRIALS = 100
_RANDOM_STREAM = 2_000_000
_SINGLE_CUT_STREAM = 2_000_001
_GW_STREAM = 2_000_002
_EXTENSION_STREAM = 2_000_100

Initialization = Tuple[BlochAngles, MixerSpec]


def build_instance(
    spec: ExperimentSpec, settings: Optional[Settings] = None
) -> WeightedGraph:
    """Read the instance file or run the configured generator."""
    if spec.instance is not None:
        return read_graph(spec.instance, one_indexed=spec.one_indexed)
    generator = spec.generator
    assert generator is not None
    if generator.kind == "er":
        return generate_erdos_renyi(
            generator.n,
            generator.edge_prob,
            WeightLaw.parse(generator.weights),
            seed=generator.seed,
        )
    t = generator.t if generator.t is not None else generator.m // 2
    return generate_karloff(generator.m, t, generator.b, settings)


class ExperimentRunner:
    """Runs every (seed, variant, rank, rotation, depth) combination of a spec."""

    def __init__(
        self,
        spec: ExperimentSpec,
        settings: Optional[Settings] = None,
        timing: bool = True,
    ):
        """
        Initialize the runner.

        Args:
            spec: Validated experiment configuration.
            settings: Numerical settings (defaults from the environment).
            timing: Whether to fill the ``wall_ms`` column; disable for
                byte-identical output across runs.
        """
        self.spec = spec
        self.settings = settings
        self.timing = timing
        self.depths = sorted(set(spec.depths))
        self._extremes: Optional[CutExtremes] = None
        # (row label with depth and init index, optimizer result) per ascent
        self.optimizations: List[Tuple[Dict[str, Any], OptResult]] = []

    def run(self, graph: Optional[WeightedGraph] = None) -> List[ResultRow]:
        """
        Run the experiment and return rows in canonical order.

        Raises:
            CapacityError: If the instance exceeds a size cap.
            DegenerateInstanceError: If Max-Cut equals Min-Cut.
        """
        g = graph if graph is not None else build_instance(self.spec, self.settings)
        extremes = brute_force_extremes(g, self.settings)
        approximation_ratio(g, extremes.max_cut, extremes)
        self._extremes = extremes
        self.optimizations = []
        logger.info(
            "Instance %s: n=%d, m=%d, max cut %g, min cut %g",
            self.spec.instance_id(),
            g.n,
            g.m,
            extremes.max_cut,
            extremes.min_cut,
        )

        rows: List[ResultRow] = []
        for seed in self.spec.seeds:
            rows.extend(self._run_seed(g, extremes, seed))
        return sort_rows(rows)

    def _instance_label(self, seed: int) -> str:
        label = self.spec.instance_id()
        return label if len(self.spec.seeds) == 1 else f"{label}@seed{seed}"

    def _run_seed(
        self, g: WeightedGraph, extremes: CutExtremes, seed: int
    ) -> List[ResultRow]:
        cfg = OptConfig.from_mapping(self.spec.optimizer, seed=seed)
        warmstarts: Dict[Tuple[int, str], List[BlochAngles]] = {}
        rows: List[ResultRow] = []
        for variant in self.spec.variants:
            for rank, rotation in self._groups(variant):
                label = dict(
                    instance=self._instance_label(seed),
                    variant=variant,
                    rank=rank,
                    rotation=rotation,
                    seed=seed,
                )
                try:
                    if variant == "gw":
                        rows.extend(self._gw_rows(g, extremes, seed, label))
                        continue
                    inits = self._initializations(
                        g, variant, rank, rotation, seed, warmstarts
                    )
                    rows.extend(self._depth_rows(g, extremes, inits, cfg, label))
                except CapacityError:
                    raise
                except WarmQaoaError as e:
                    logger.error("%s failed: %s", variant, e)
                    rows.extend(
                        ResultRow(depth=depth, fp=None, ar=None, error=str(e), **label)
                        for depth in self.depths
                    )
        return rows

    def _gw_rows(
        self, g: WeightedGraph, extremes: CutExtremes, seed: int, label: dict
    ) -> List[ResultRow]:
        """The GW expected cut of the SDP proxy, repeated at every depth."""
        start = time.perf_counter()
        relaxed = sdp_solve(g, seed=derive_seed(seed, _GW_STREAM))
        fp = hyperplane_expected_cut(g, relaxed)
        wall_ms = (time.perf_counter() - start) * 1000.0
        logger.info("gw: expected cut %.6f", fp)
        return [
            ResultRow(
                depth=depth,
                fp=fp,
                ar=approximation_ratio(g, fp, extremes),
                wall_ms=wall_ms if self.timing else None,
                **label,
            )
            for depth in self.depths
        ]

    def _groups(self, variant: str) -> List[Tuple[Optional[int], Optional[str]]]:
        if variant in ("warm", "warmest"):
            return [
                (rank, rot) for rank in self.spec.ranks for rot in self.spec.rotations
            ]
        return [(None, None)]

    def _warmstart(
        self,
        g: WeightedGraph,
        rank: int,
        rotation: str,
        seed: int,
        cache: Dict[Tuple[int, str], List[BlochAngles]],
    ) -> List[BlochAngles]:
        # warm and warmest share the same warm-started states
        if (rank, rotation) not in cache:
            states, report = select_warmstart(
                g,
                method=self.spec.method,
                k=rank,
                attempts=self.spec.attempts,
                rotation="vertex_at_top" if rotation == "vertex" else rotation,
                rotations_per_solution=self.spec.rotations_per_solution,
                seed=seed,
                extremes=self._extremes,
            )
            if not report.stationary:
                logger.warning(
                    "Warm-start rank %d (seed %d) is not stationary", rank, seed
                )
            cache[(rank, rotation)] = states
        return cache[(rank, rotation)]

    def _initializations(
        self,
        g: WeightedGraph,
        variant: str,
        rank: Optional[int],
        rotation: Optional[str],
        seed: int,
        cache: Dict[Tuple[int, str], List[BlochAngles]],
    ) -> List[Initialization]:
        if variant == "standard":
            return [(BlochAngles.uniform_superposition(g.n), MixerSpec.standard(g.n))]
        if variant == "random":
            s = random_bloch_angles(g.n, seed=derive_seed(seed, _RANDOM_STREAM))
            return [(s, MixerSpec.from_state(s))]
        if variant == "single_cut_epsilon":
            relaxed = sdp_solve(g, seed=derive_seed(seed, _SINGLE_CUT_STREAM))
            cut, _ = best_hyperplane_cut(g, relaxed, GW_ROUNDING_TRIALS, seed=seed)
            s = single_cut_epsilon_state(cut, self.spec.epsilon)
            return [(s, MixerSpec.from_state(s))]

        assert rank is not None and rotation is not None
        states = self._warmstart(g, rank, rotation, seed, cache)
        if variant == "warm":
            return [(s, MixerSpec.standard(g.n)) for s in states]
        return [(s, MixerSpec.from_state(s)) for s in states]

    def _depth_sweep(
        self, circuit: QaoaCircuit, cfg: OptConfig
    ) -> List[Tuple[OptResult, float]]:
        """
        Optimize each depth from fresh angles and from the previous optimum.

        The previous optimum is extended twice: with random layers as an ascent
        start, and with zero layers as a witness whose value equals the previous
        best, so the attained optimum never decreases with depth.
        """
        results = []
        previous: Optional[OptResult] = None
        for depth in self.depths:
            start = time.perf_counter()
            best = ascend_multistart(circuit, depth, self.spec.starts, cfg)
            if previous is not None:
                best = max(
                    best,
                    self._extended_ascent(circuit, cfg, previous, depth),
                    key=lambda result: result.best_value,
                )
            previous = best
            results.append((best, (time.perf_counter() - start) * 1000.0))
        return results

    @staticmethod
    def _extended_ascent(
        circuit: QaoaCircuit, cfg: OptConfig, previous: OptResult, depth: int
    ) -> OptResult:
        witness = OptResult(
            params=previous.params.extended(depth),
            best_value=previous.best_value,
            trace=(previous.best_value,),
            converged=previous.converged,
            iterations=0,
        )
        if previous.params.p == 0:
            return witness
        rng = as_generator(derive_seed(cfg.seed, _EXTENSION_STREAM + depth))
        padded = previous.params.extended(depth, rng, cfg.init_scale)
        result = ascend(circuit, depth, cfg, padded)
        return result if result.best_value >= witness.best_value else witness

    def _depth_rows(
        self,
        g: WeightedGraph,
        extremes: CutExtremes,
        inits: Sequence[Initialization],
        cfg: OptConfig,
        label: dict,
    ) -> List[ResultRow]:
        best_fp = {depth: -float("inf") for depth in self.depths}
        elapsed = {depth: 0.0 for depth in self.depths}
        for index, (s, m) in enumerate(inits):
            circuit = QaoaCircuit(g, s, m, self.settings)
            sweep = self._depth_sweep(circuit, cfg)
            for depth, (result, wall_ms) in zip(self.depths, sweep):
                self.optimizations.append(
                    ({**label, "depth": depth, "init": index}, result)
                )
                fp = result.best_value
                if self.spec.noise_q > 0:
                    # Ideal-optimal angles, evaluated under dephasing.
                    _, fp = run_qaoa_noisy(
                        g, s, m, result.params, self.spec.noise_q, self.settings
                    )
                best_fp[depth] = max(best_fp[depth], fp)
                elapsed[depth] += wall_ms

        rows = []
        for depth in self.depths:
            fp = best_fp[depth]
            rows.append(
                ResultRow(
                    depth=depth,
                    fp=fp,
                    ar=approximation_ratio(g, fp, extremes),
                    wall_ms=elapsed[depth] if self.timing else None,
                    **label,
                )
            )
            logger.info(
                "%s rank=%s rotation=%s p=%d: F=%.6f",
                label["variant"],
                label["rank"],
                label["rotation"],
                depth,
                fp,
            )
        return rows
