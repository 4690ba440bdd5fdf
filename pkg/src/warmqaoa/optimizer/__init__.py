"""Finite-difference optimization of QAOA angles and p=1 grid sweeps."""

from .ascent import (
    SweepGrid,
    ascend,
    ascend_multistart,
    multistart,
    optimize,
    sweep_grid,
)
from .models import OptConfig, OptResult

__all__ = [
    "OptConfig",
    "OptResult",
    "SweepGrid",
    "ascend",
    "ascend_multistart",
    "optimize",
    "multistart",
    "sweep_grid",
]
