"""
Graph data models for warmqaoa.

This module contains the immutable value types describing a Max-Cut
instance and the cuts evaluated on it. Vertices are 0-indexed everywhere;
bit ``j`` of a cut (and of a basis-state index) is the side of vertex ``j``.
"""

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, List, Sequence, Tuple

import networkx as nx
import numpy as np

from ..errors import InvalidArgumentError

Edge = Tuple[int, int, float]


@dataclass(frozen=True)
class WeightedGraph:
    """Undirected weighted graph G = (V, E, w) with canonical edge storage."""

    n: int
    edges: Tuple[Edge, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise InvalidArgumentError("vertex count must be a positive integer")
        seen = set()
        for u, v, w in self.edges:
            if not 0 <= u < v < self.n:
                raise InvalidArgumentError(
                    f"edge ({u}, {v}) must satisfy 0 <= u < v < n={self.n}"
                )
            if (u, v) in seen:
                raise InvalidArgumentError(f"duplicate edge ({u}, {v})")
            if not math.isfinite(w):
                raise InvalidArgumentError(f"edge ({u}, {v}) has non-finite weight")
            seen.add((u, v))

    @classmethod
    def from_edges(
        cls, n: int, edges: Iterable[Tuple[int, int, float]]
    ) -> "WeightedGraph":
        """
        Build a graph from edges in any orientation.

        Endpoints are swapped so that ``u < v`` and the edge list is sorted.
        Self-loops and duplicates are rejected rather than merged.
        """
        canonical: List[Edge] = []
        for u, v, w in edges:
            u, v = int(u), int(v)
            if u == v:
                raise InvalidArgumentError(f"self-loop at vertex {u}")
            if u > v:
                u, v = v, u
            canonical.append((u, v, float(w)))
        return cls(n=n, edges=tuple(sorted(canonical)))

    @classmethod
    def from_networkx(cls, graph: nx.Graph, weight: str = "weight") -> "WeightedGraph":
        """Convert a networkx graph, relabelling nodes in sorted order."""
        nodes = sorted(graph.nodes())
        index = {node: i for i, node in enumerate(nodes)}
        return cls.from_edges(
            len(nodes),
            (
                (index[u], index[v], data.get(weight, 1.0))
                for u, v, data in graph.edges(data=True)
            ),
        )

    def to_networkx(self) -> nx.Graph:
        """Return an equivalent networkx graph with a ``weight`` attribute."""
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_weighted_edges_from(self.edges)
        return graph

    @property
    def m(self) -> int:
        """Number of edges."""
        return len(self.edges)

    @cached_property
    def edge_arrays(self) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Edge endpoints and weights as numpy arrays ``(us, vs, ws)``."""
        if not self.edges:
            empty = np.zeros(0, dtype=np.int64)
            return empty, empty.copy(), np.zeros(0)
        us, vs, ws = zip(*self.edges)
        return (
            np.asarray(us, dtype=np.int64),
            np.asarray(vs, dtype=np.int64),
            np.asarray(ws, dtype=float),
        )

    @cached_property
    def adjacency(self) -> np.ndarray:
        """Dense symmetric weight matrix."""
        matrix = np.zeros((self.n, self.n))
        us, vs, ws = self.edge_arrays
        matrix[us, vs] = ws
        matrix[vs, us] = ws
        return matrix

    @property
    def total_weight(self) -> float:
        """Sum of edge weights."""
        return float(self.edge_arrays[2].sum())

    @property
    def absolute_weight(self) -> float:
        """Sum of absolute edge weights, the W̄ scale of termination rules."""
        return float(np.abs(self.edge_arrays[2]).sum())

    @property
    def has_nonnegative_weights(self) -> bool:
        """Whether every edge weight is >= 0."""
        return bool(np.all(self.edge_arrays[2] >= 0))

    def degrees(self) -> np.ndarray:
        """Unweighted vertex degrees."""
        us, vs, _ = self.edge_arrays
        return np.bincount(np.concatenate([us, vs]), minlength=self.n)


@dataclass(frozen=True)
class Cut:
    """A bipartition of the vertices; bit ``j`` is the side of vertex ``j``."""

    assignment: Tuple[int, ...]

    def __post_init__(self) -> None:
        if any(bit not in (0, 1) for bit in self.assignment):
            raise InvalidArgumentError("cut assignment must contain only 0 and 1")

    @classmethod
    def from_bits(cls, bits: str) -> "Cut":
        """
        Parse a bit string where character ``j`` is the side of vertex ``j``.

        Examples:
            >>> Cut.from_bits("011").side_zero()
            (0,)
        """
        if not bits or any(ch not in "01" for ch in bits):
            raise InvalidArgumentError(f"invalid bit string {bits!r}")
        return cls(tuple(int(ch) for ch in bits))

    @classmethod
    def from_sequence(cls, bits: Sequence[int]) -> "Cut":
        """Build a cut from any integer sequence of 0/1 values."""
        return cls(tuple(int(bit) for bit in bits))

    @classmethod
    def from_index(cls, index: int, n: int) -> "Cut":
        """Decode a basis-state index; vertex ``j`` is bit ``j`` (LSB = vertex 0)."""
        if not 0 <= index < 2**n:
            raise InvalidArgumentError(f"index {index} out of range for n={n}")
        return cls(tuple((index >> j) & 1 for j in range(n)))

    @property
    def n(self) -> int:
        """Number of vertices."""
        return len(self.assignment)

    @property
    def index(self) -> int:
        """Basis-state index encoding this cut."""
        return sum(bit << j for j, bit in enumerate(self.assignment))

    def complement(self) -> "Cut":
        """The same partition with the sides swapped."""
        return Cut(tuple(1 - bit for bit in self.assignment))

    def side_zero(self) -> Tuple[int, ...]:
        """Vertices in S = {i : bit i = 0}."""
        return tuple(i for i, bit in enumerate(self.assignment) if bit == 0)

    def __str__(self) -> str:
        return "".join(str(bit) for bit in self.assignment)


@dataclass(frozen=True)
class CutExtremes:
    """Exact maximum and minimum cut values with witnesses."""

    max_cut: float
    min_cut: float
    max_witness: Cut
    min_witness: Cut

    @property
    def spread(self) -> float:
        """Normalization denominator ``max_cut - min_cut``."""
        return self.max_cut - self.min_cut
