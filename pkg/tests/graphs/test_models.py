"""Tests for graph and cut models."""

import networkx as nx
import numpy as np
import pytest

from warmqaoa.errors import InvalidArgumentError
from warmqaoa.graphs.models import Cut, WeightedGraph


class TestWeightedGraph:
    """Tests for WeightedGraph."""

    def test_from_edges_canonicalizes(self):
        """Edges are oriented u < v and sorted."""
        g = WeightedGraph.from_edges(3, [(2, 0, 1.5), (1, 0, 2.0)])
        assert g.edges == ((0, 1, 2.0), (0, 2, 1.5))

    @pytest.mark.parametrize(
        "edges",
        [
            [(0, 0, 1.0)],
            [(0, 1, 1.0), (1, 0, 2.0)],
            [(0, 3, 1.0)],
            [(0, 1, float("nan"))],
        ],
    )
    def test_invalid_edges_rejected(self, edges):
        """Self-loops, duplicates, out-of-range endpoints and NaN weights fail."""
        with pytest.raises(InvalidArgumentError):
            WeightedGraph.from_edges(3, edges)

    def test_vertex_count_must_be_positive(self):
        """An empty vertex set is not a graph."""
        with pytest.raises(InvalidArgumentError):
            WeightedGraph.from_edges(0, [])

    def test_weights_and_degrees(self, weighted_graph):
        """Aggregates over the edge list."""
        assert weighted_graph.m == 5
        assert weighted_graph.total_weight == pytest.approx(4.0)
        assert weighted_graph.absolute_weight == pytest.approx(6.0)
        assert not weighted_graph.has_nonnegative_weights
        assert weighted_graph.degrees().tolist() == [2, 3, 3, 2]

    def test_adjacency_is_symmetric(self, weighted_graph):
        a = weighted_graph.adjacency
        assert np.array_equal(a, a.T)
        assert a[0, 2] == -1.0

    def test_networkx_round_trip(self, weighted_graph):
        """Conversion through networkx preserves edges and weights."""
        graph = weighted_graph.to_networkx()
        assert isinstance(graph, nx.Graph)
        assert WeightedGraph.from_networkx(graph) == weighted_graph

    def test_edgeless_graph(self):
        g = WeightedGraph.from_edges(3, [])
        us, vs, ws = g.edge_arrays
        assert us.size == vs.size == ws.size == 0
        assert g.total_weight == 0.0


class TestCut:
    """Tests for Cut."""

    def test_index_is_little_endian(self):
        """Vertex j is bit j of the basis index."""
        cut = Cut.from_bits("100")
        assert cut.index == 1
        assert Cut.from_index(6, 3) == Cut.from_bits("011")

    def test_complement_and_side_zero(self):
        cut = Cut.from_bits("0110")
        assert str(cut.complement()) == "1001"
        assert cut.side_zero() == (0, 3)

    @pytest.mark.parametrize("bits", ["", "012", "ab"])
    def test_invalid_bit_strings(self, bits):
        with pytest.raises(InvalidArgumentError):
            Cut.from_bits(bits)

    def test_index_out_of_range(self):
        with pytest.raises(InvalidArgumentError):
            Cut.from_index(8, 3)
