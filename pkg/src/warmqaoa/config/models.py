"""
Configuration models for warmqaoa.

This module contains the dataclasses describing an experiment run. They are
built from the YAML configuration file (or CLI flags) with ``from_dict`` and
checked with ``validate``, so that a bad run is rejected before any solver
starts.
"""

import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from ..errors import WarmQaoaError

VARIANTS = ("standard", "warm", "warmest", "single_cut_epsilon", "random", "gw")
WARM_VARIANTS = ("warm", "warmest")
ROTATIONS = ("uniform", "vertex")
METHODS = ("bm", "gw_projected")
GENERATOR_KINDS = ("er", "karloff")
OPTIMIZER_KEYS = ("init_scale", "termination_tol_factor", "max_iters", "fd_step")


class ConfigurationError(WarmQaoaError):
    """Raised when there's an error in the experiment configuration."""


def _int_list(data: dict, key: str, default: List[int]) -> List[int]:
    value = data.get(key, default)
    if isinstance(value, int):
        return [value]
    if isinstance(value, str):
        return [int(part) for part in value.split(",") if part.strip()]
    if not isinstance(value, list):
        raise ConfigurationError(f"{key} must be a list of integers")
    return [int(item) for item in value]


def _str_list(data: dict, key: str, default: List[str]) -> List[str]:
    value = data.get(key, default)
    if isinstance(value, str):
        return [part.strip() for part in value.split(",") if part.strip()]
    if not isinstance(value, list):
        raise ConfigurationError(f"{key} must be a list of strings")
    return [str(item) for item in value]


@dataclass
class GeneratorConfig:
    """Instance generator settings, used when no instance file is given."""

    kind: str
    n: int = 8
    edge_prob: float = 0.5
    weights: str = "unit"
    seed: int = 0
    m: int = 6
    t: Optional[int] = None
    b: int = 1

    @classmethod
    def from_dict(cls, data: dict) -> "GeneratorConfig":
        """Create GeneratorConfig from dictionary."""
        if not isinstance(data, dict):
            raise ConfigurationError("generator must be a dictionary")
        try:
            return cls(
                kind=data["kind"],
                n=int(data.get("n", 8)),
                edge_prob=float(data.get("edge_prob", 0.5)),
                weights=str(data.get("weights", "unit")),
                seed=int(data.get("seed", 0)),
                m=int(data.get("m", 6)),
                t=None if data.get("t") is None else int(data["t"]),
                b=int(data.get("b", 1)),
            )
        except KeyError as e:
            raise ConfigurationError(f"Missing required generator key: {e}") from e
        except (ValueError, TypeError) as e:
            raise ConfigurationError(f"Invalid generator configuration: {e}") from e

    def validate(self) -> None:
        """Validate the generator configuration."""
        if self.kind not in GENERATOR_KINDS:
            raise ConfigurationError(
                f"generator kind must be one of {GENERATOR_KINDS}, got {self.kind!r}"
            )
        if self.kind == "er":
            if self.n < 1:
                raise ConfigurationError("generator n must be positive")
            if not 0.0 <= self.edge_prob <= 1.0:
                raise ConfigurationError("generator edge_prob must lie in [0, 1]")
        if self.kind == "karloff" and (self.m < 2 or self.m % 2):
            raise ConfigurationError("karloff m must be a positive even integer")

    def describe(self) -> str:
        """Short instance identifier used in result rows."""
        if self.kind == "er":
            return f"er-n{self.n}-p{self.edge_prob:g}-s{self.seed}"
        t = self.t if self.t is not None else self.m // 2
        return f"karloff-{self.m}-{t}-{self.b}"


@dataclass
class ExperimentSpec:
    """Complete description of one experiment run."""

    instance: Optional[str]
    generator: Optional[GeneratorConfig]
    variants: List[str]
    depths: List[int]
    seeds: List[int] = field(default_factory=lambda: [0])
    method: str = "bm"
    ranks: List[int] = field(default_factory=lambda: [2])
    rotations: List[str] = field(default_factory=lambda: ["vertex"])
    attempts: int = 5
    rotations_per_solution: int = 5
    starts: int = 1
    epsilon: float = 0.5
    noise_q: float = 0.0
    one_indexed: bool = False
    output: Optional[str] = None
    optimizer: Dict[str, float] = field(default_factory=dict)

    @classmethod
    def from_dict(cls, data: dict) -> "ExperimentSpec":
        """Create ExperimentSpec from dictionary."""
        try:
            generator_data = data.get("generator")
            optimizer = data.get("optimizer") or {}
            if not isinstance(optimizer, dict):
                raise ConfigurationError("optimizer must be a dictionary")
            return cls(
                instance=data.get("instance"),
                generator=(
                    GeneratorConfig.from_dict(generator_data)
                    if generator_data is not None
                    else None
                ),
                variants=_str_list(data, "variants", ["warmest"]),
                depths=_int_list(data, "depths", [1]),
                seeds=_int_list(data, "seeds", [0]),
                method=str(data.get("method", "bm")),
                ranks=_int_list(data, "ranks", [2]),
                rotations=_str_list(data, "rotations", ["vertex"]),
                attempts=int(data.get("attempts", 5)),
                rotations_per_solution=int(data.get("rotations_per_solution", 5)),
                starts=int(data.get("starts", 1)),
                epsilon=float(data.get("epsilon", 0.5)),
                noise_q=float(data.get("noise_q", 0.0)),
                one_indexed=bool(data.get("one_indexed", False)),
                output=data.get("output"),
                optimizer={key: float(value) for key, value in optimizer.items()},
            )
        except (ValueError, TypeError) as e:
            raise ConfigurationError(f"Invalid configuration: {e}") from e

    def validate(self) -> None:
        """Validate the complete configuration."""
        if (self.instance is None) == (self.generator is None):
            raise ConfigurationError("exactly one of instance or generator is required")
        if self.generator is not None:
            self.generator.validate()
        if not self.variants:
            raise ConfigurationError("at least one variant must be configured")
        for variant in self.variants:
            if variant not in VARIANTS:
                raise ConfigurationError(
                    f"variant must be one of {VARIANTS}, got {variant!r}"
                )
        if not self.depths:
            raise ConfigurationError("depths cannot be empty")
        if any(depth < 0 for depth in self.depths):
            raise ConfigurationError("depths must be nonnegative")
        if not self.seeds or any(seed < 0 for seed in self.seeds):
            raise ConfigurationError("seeds must be nonempty and nonnegative")
        if self.method not in METHODS:
            raise ConfigurationError(f"method must be one of {METHODS}")
        if not self.ranks or any(rank not in (2, 3) for rank in self.ranks):
            raise ConfigurationError("ranks must be drawn from {2, 3}")
        if not self.rotations or any(rot not in ROTATIONS for rot in self.rotations):
            raise ConfigurationError(f"rotations must be drawn from {ROTATIONS}")
        if self.attempts < 1:
            raise ConfigurationError("attempts must be positive")
        if self.rotations_per_solution < 1:
            raise ConfigurationError("rotations_per_solution must be positive")
        if self.starts < 1:
            raise ConfigurationError("starts must be positive")
        if not 0.0 <= self.epsilon <= math.pi / 2:
            raise ConfigurationError("epsilon must lie in [0, pi/2]")
        if not 0.0 <= self.noise_q <= 1.0:
            raise ConfigurationError("noise_q must lie in [0, 1]")
        for key in self.optimizer:
            if key not in OPTIMIZER_KEYS:
                raise ConfigurationError(f"unknown optimizer setting {key!r}")

    def instance_id(self) -> str:
        """Identifier written in the ``instance`` column of result rows."""
        if self.instance is not None:
            return self.instance
        assert self.generator is not None
        return self.generator.describe()

