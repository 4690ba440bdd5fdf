"""
warmqaoa - Warm-started QAOA for Max-Cut with custom mixers.

This package builds warm-started initial states from low-rank Max-Cut
relaxations, simulates QAOA exactly (statevector and density matrix),
optimizes the circuit angles and checks the spectral properties of the
interpolated Hamiltonian.
"""

from .config import ConfigurationError, ExperimentSpec, Settings
from .core import ExperimentRunner
from .errors import (
    CapacityError,
    DegenerateInstanceError,
    EdgeListParseError,
    InvalidArgumentError,
    NumericalError,
    WarmQaoaError,
)
from .graphs import Cut, WeightedGraph
from .optimizer import OptConfig, OptResult, optimize
from .simulator import MixerSpec, QaoaParams, run_qaoa
from .warmstart import BlochAngles, RelaxedSolution, select_warmstart

__version__ = "0.1.0"

__all__ = [
    "WeightedGraph",
    "Cut",
    "BlochAngles",
    "RelaxedSolution",
    "select_warmstart",
    "MixerSpec",
    "QaoaParams",
    "run_qaoa",
    "OptConfig",
    "OptResult",
    "optimize",
    "ExperimentSpec",
    "ExperimentRunner",
    "Settings",
    "WarmQaoaError",
    "InvalidArgumentError",
    "CapacityError",
    "DegenerateInstanceError",
    "NumericalError",
    "EdgeListParseError",
    "ConfigurationError",
]
