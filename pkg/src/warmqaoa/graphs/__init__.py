"""Max-Cut instances: representation, exact oracles, generators and IO."""

from .edgelist import parse_edge_list, read_graph, serialize_edge_list
from .generators import (
    WeightLaw,
    generate_erdos_renyi,
    generate_karloff,
    johnson_eigenvalue,
    karloff_gw_ratio,
)
from .models import Cut, CutExtremes, WeightedGraph
from .oracles import (
    approximation_ratio,
    brute_force_extremes,
    cut_value,
    cut_values_for_indices,
)

__all__ = [
    "WeightedGraph",
    "Cut",
    "CutExtremes",
    "WeightLaw",
    "cut_value",
    "cut_values_for_indices",
    "brute_force_extremes",
    "approximation_ratio",
    "generate_erdos_renyi",
    "generate_karloff",
    "karloff_gw_ratio",
    "johnson_eigenvalue",
    "parse_edge_list",
    "serialize_edge_list",
    "read_graph",
]
