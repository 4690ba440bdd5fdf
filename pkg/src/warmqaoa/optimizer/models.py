"""Optimizer configuration and result records."""

from dataclasses import dataclass, fields, replace
from typing import Any, Dict, Mapping, Optional, Tuple

from ..errors import InvalidArgumentError
from ..simulator.models import QaoaParams


@dataclass(frozen=True)
class OptConfig:
    """
    Settings of the finite-difference ascent.

    Attributes:
        init_scale: Initial angles are drawn from Uniform[0, init_scale].
        termination_tol_factor: Stop once an accepted step gains less than
            W̄ × this factor, where W̄ is the total absolute edge weight.
        max_iters: Iteration budget.
        fd_step: Central finite-difference step.
        seed: Seed of the initial angles.
    """

    init_scale: float = 0.01
    termination_tol_factor: float = 1e-6
    max_iters: int = 2000
    fd_step: float = 1e-4
    seed: int = 0

    def __post_init__(self) -> None:
        for name in ("init_scale", "termination_tol_factor", "max_iters", "fd_step"):
            if not getattr(self, name) > 0:
                raise InvalidArgumentError(f"{name} must be positive")
        if self.seed < 0:
            raise InvalidArgumentError("seed must be nonnegative")

    @classmethod
    def from_mapping(
        cls, values: Mapping[str, Any], seed: Optional[int] = None
    ) -> "OptConfig":
        """Build from a configuration mapping; unknown keys are rejected."""
        known = {f.name for f in fields(cls)}
        unknown = set(values) - known
        if unknown:
            raise InvalidArgumentError(f"unknown optimizer settings: {sorted(unknown)}")
        config = cls(
            **{
                key: int(value) if key in ("max_iters", "seed") else float(value)
                for key, value in values.items()
            }
        )
        return config if seed is None else replace(config, seed=seed)


@dataclass(frozen=True)
class OptResult:
    """Outcome of one ascent; ``trace`` holds F_p after every accepted step."""

    params: QaoaParams
    best_value: float
    trace: Tuple[float, ...]
    converged: bool
    iterations: int

    def to_dict(self, include_trace: bool = False) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "params": self.params.to_dict(),
            "best_value": self.best_value,
            "iterations": self.iterations,
            "converged": self.converged,
        }
        if include_trace:
            data["trace"] = list(self.trace)
        return data
