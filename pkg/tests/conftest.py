"""Shared test fixtures and utilities."""

from unittest.mock import Mock

import pytest

from warmqaoa.config.models import ExperimentSpec, GeneratorConfig
from warmqaoa.fs.handler import FileHandler
from warmqaoa.graphs.generators import WeightLaw, generate_erdos_renyi
from warmqaoa.graphs.models import WeightedGraph


@pytest.fixture
def mock_file_handler():
    """Create a mock file handler."""
    handler = Mock(spec=FileHandler)
    handler.create = Mock(return_value=True)
    return handler


@pytest.fixture
def single_edge():
    """K_2 with unit weight."""
    return WeightedGraph.from_edges(2, [(0, 1, 1.0)])


@pytest.fixture
def triangle():
    """K_3 with unit weights: max cut 2, min cut 0."""
    return WeightedGraph.from_edges(3, [(0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0)])


@pytest.fixture
def square():
    """The 4-cycle, bipartite with max cut 4."""
    return WeightedGraph.from_edges(
        4, [(0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0), (0, 3, 1.0)]
    )


@pytest.fixture
def weighted_graph():
    """Small graph with one negative weight."""
    return WeightedGraph.from_edges(
        4, [(0, 1, 2.0), (1, 2, 0.5), (2, 3, 1.5), (0, 2, -1.0), (1, 3, 1.0)]
    )


@pytest.fixture
def er_graph():
    """Seeded G(6, 0.5) instance with unit weights."""
    return generate_erdos_renyi(6, 0.5, WeightLaw.parse("unit"), seed=3)


@pytest.fixture
def edge_list_file(tmp_path, square):
    """The 4-cycle written as an edge-list file."""
    path = tmp_path / "square.txt"
    path.write_text("# 4-cycle\n4 4\n0 1 1\n1 2 1\n2 3 1\n3 0 1\n")
    return path


@pytest.fixture
def experiment_spec(edge_list_file):
    """Minimal experiment on the 4-cycle."""
    spec = ExperimentSpec(
        instance=str(edge_list_file),
        generator=None,
        variants=["standard", "warmest"],
        depths=[0, 1],
        attempts=2,
        rotations_per_solution=2,
    )
    spec.validate()
    return spec


@pytest.fixture
def er_spec():
    """Experiment driven by the ER generator."""
    return ExperimentSpec(
        instance=None,
        generator=GeneratorConfig(kind="er", n=5, edge_prob=0.6, seed=1),
        variants=["standard"],
        depths=[1],
    )
