"""
Instance generators: Erdős–Rényi graphs and Karloff instances.

Karloff instances J(m, t, b) have the t-subsets of {0, ..., m-1} as
vertices, joined when they intersect in exactly b elements. They are hard
for Goemans–Williamson rounding, and their adjacency spectrum is known in
closed form (``johnson_eigenvalue``).
"""

import itertools
import logging
import math
import re
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..config.settings import Settings, resolve_settings
from ..errors import CapacityError, InvalidArgumentError
from ..utils.seeding import SeedLike, as_generator
from .models import WeightedGraph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WeightLaw:
    """Edge weight distribution: ``unit`` or ``uniform`` on [low, high)."""

    kind: str = "unit"
    low: float = 0.0
    high: float = 1.0

    def __post_init__(self) -> None:
        if self.kind not in ("unit", "uniform"):
            raise InvalidArgumentError(f"unknown weight law {self.kind!r}")
        if self.kind == "uniform" and not self.low < self.high:
            raise InvalidArgumentError("uniform weight law needs low < high")

    @classmethod
    def parse(cls, text: str) -> "WeightLaw":
        """
        Parse ``unit`` or ``uniform:a,b``.

        Examples:
            >>> WeightLaw.parse("uniform:-1,1")
            WeightLaw(kind='uniform', low=-1.0, high=1.0)
        """
        text = text.strip()
        if text == "unit":
            return cls()
        match = re.fullmatch(r"uniform:\s*([^,]+),\s*(.+)", text)
        if not match:
            raise InvalidArgumentError(
                f"weight law must be 'unit' or 'uniform:a,b', got {text!r}"
            )
        try:
            low, high = float(match.group(1)), float(match.group(2))
        except ValueError as e:
            raise InvalidArgumentError(f"invalid uniform bounds in {text!r}") from e
        return cls(kind="uniform", low=low, high=high)

    def sample(self, rng: np.random.Generator, size: int) -> np.ndarray:
        """Draw ``size`` weights."""
        if self.kind == "unit":
            return np.ones(size)
        return rng.uniform(self.low, self.high, size=size)


def generate_erdos_renyi(
    n: int, edge_prob: float, weight_law: Optional[WeightLaw] = None, seed: SeedLike = 0
) -> WeightedGraph:
    """
    G(n, p) random graph with weights drawn from ``weight_law``.

    Each unordered pair is included independently with probability
    ``edge_prob``; pairs are visited in lexicographic order, so the result
    is a deterministic function of the seed.
    """
    if n < 1:
        raise InvalidArgumentError("n must be at least 1")
    if not 0.0 <= edge_prob <= 1.0:
        raise InvalidArgumentError("edge_prob must lie in [0, 1]")
    law = weight_law or WeightLaw()
    rng = as_generator(seed)

    us, vs = np.triu_indices(n, k=1)
    keep = rng.random(us.size) < edge_prob
    weights = law.sample(rng, int(keep.sum()))
    edges = zip(us[keep].tolist(), vs[keep].tolist(), weights.tolist())
    graph = WeightedGraph.from_edges(n, edges)
    logger.debug("Generated G(%d, %g) with %d edges", n, edge_prob, graph.m)
    return graph


def generate_karloff(
    m: int, t: int, b: int, settings: Optional[Settings] = None
) -> WeightedGraph:
    """
    Karloff instance J(m, t, b) with unit weights.

    Vertices are the t-subsets of range(m) in lexicographic order; two
    distinct subsets are adjacent iff they share exactly ``b`` elements.

    Raises:
        InvalidArgumentError: If m is odd or 0 <= b <= t <= m fails.
        CapacityError: If C(m, t) exceeds the Karloff vertex cap.
    """
    if m < 2 or m % 2:
        raise InvalidArgumentError(f"m must be a positive even integer, got {m}")
    if not 0 <= b <= t <= m:
        raise InvalidArgumentError(f"need 0 <= b <= t <= m, got m={m}, t={t}, b={b}")
    cap = resolve_settings(settings).karloff_vertex_cap
    size = math.comb(m, t)
    if size > cap:
        raise CapacityError(f"J({m},{t},{b}) has {size} vertices, cap is {cap}")

    subsets = list(itertools.combinations(range(m), t))
    incidence = np.zeros((size, m), dtype=np.int64)
    for row, subset in enumerate(subsets):
        incidence[row, list(subset)] = 1
    overlap = incidence @ incidence.T
    us, vs = np.nonzero(np.triu(overlap == b, k=1))
    edges = zip(us.tolist(), vs.tolist(), [1.0] * us.size)
    graph = WeightedGraph.from_edges(size, edges)
    logger.debug("Generated J(%d,%d,%d): %d vertices, %d edges", m, t, b, size, graph.m)
    return graph


def karloff_gw_ratio(m: int, b: int) -> float:
    """
    Goemans–Williamson approximation ratio on J(m, m/2, b).

    Returns (arccos(4b/m − 1)/π) / (1 − 2b/m); valid for 0 <= b < m/4.
    """
    if m < 2 or m % 2:
        raise InvalidArgumentError(f"m must be a positive even integer, got {m}")
    if not 0 <= b < m / 4:
        raise InvalidArgumentError(f"need 0 <= b < m/4, got m={m}, b={b}")
    return (math.acos(4 * b / m - 1) / math.pi) / (1 - 2 * b / m)


def _binom(n: int, k: int) -> int:
    if n < 0:
        raise InvalidArgumentError(f"binomial C({n}, {k}) has negative top argument")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def johnson_eigenvalue(m: int, t: int, b: int, s: int) -> float:
    """
    Eigenvalue β_s of the J(m, t, b) adjacency matrix.

    β_s = Σ_{r=0}^{s} (−1)^{s−r} C(s,r) C(t−r, t−b) C(m−t−s+r, m−2t+b).
    β_0 is the degree; for t = m/2 and b < m/4, β_1 is the smallest
    eigenvalue.
    """
    if not 0 <= s <= t:
        raise InvalidArgumentError(f"need 0 <= s <= t, got s={s}, t={t}")
    if not 0 <= b < t:
        raise InvalidArgumentError(f"need 0 <= b < t, got b={b}, t={t}")
    if t > m:
        raise InvalidArgumentError(f"need t <= m, got t={t}, m={m}")
    total = 0
    for r in range(s + 1):
        total += (
            (-1) ** (s - r)
            * _binom(s, r)
            * _binom(t - r, t - b)
            * _binom(m - t - s + r, m - 2 * t + b)
        )
    return float(total)
