"""Tests for warm-start selection and depth-0 quantities."""

import math

import numpy as np
import pytest

from warmqaoa.errors import InvalidArgumentError
from warmqaoa.graphs.generators import WeightLaw, generate_erdos_renyi
from warmqaoa.graphs.models import Cut, WeightedGraph
from warmqaoa.graphs.oracles import brute_force_extremes, cut_value
from warmqaoa.warmstart.bloch import (
    averaged_flip_probability,
    depth0_expected_cut,
    random_bloch_angles,
    single_cut_epsilon_state,
)
from warmqaoa.warmstart.models import BlochAngles, RelaxedSolution
from warmqaoa.warmstart.relaxation import bm_local_solve, hyperplane_expected_cut
from warmqaoa.warmstart.selection import (
    averaged_depth0_bound,
    rotated_initializations,
    rotation_averaged_depth0,
    select_warmstart,
)


class TestSelectWarmstart:
    """Tests for select_warmstart."""

    def test_counts_and_report(self, triangle):
        states, report = select_warmstart(
            triangle, k=2, attempts=3, rotations_per_solution=4, seed=1
        )
        assert len(states) == 4
        assert all(s.n == 3 for s in states)
        assert report.rank == 2
        assert report.attempts == 3
        assert report.bm_objective == pytest.approx(2.25, abs=1e-6)
        assert report.kappa_close == pytest.approx(1.125, abs=1e-6)
        assert report.kappa_approx == pytest.approx(1.0, abs=1e-6)

    @pytest.mark.parametrize("method", ["bm", "gw_projected"])
    def test_triangle_kappa_approx(self, triangle, method):
        """Hyperplane rounding keeps 0.878 of the relaxation on every edge."""
        _, report = select_warmstart(triangle, method=method, attempts=3, seed=2)
        assert report.kappa_approx >= 0.878 * report.kappa_close - 1e-9
        if method == "bm":
            assert report.kappa_approx >= 0.878

    def test_vertex_at_top_has_a_qubit_at_pole(self, er_graph):
        states, _ = select_warmstart(
            er_graph, rotation="vertex_at_top", rotations_per_solution=3, seed=2
        )
        assert all(s.at_poles() for s in states)

    def test_same_seed_same_states(self, er_graph):
        first, _ = select_warmstart(er_graph, k=3, rotation="uniform", seed=4)
        second, _ = select_warmstart(er_graph, k=3, rotation="uniform", seed=4)
        for a, b in zip(first, second):
            assert np.array_equal(a.theta, b.theta)
            assert np.array_equal(a.phi, b.phi)

    @pytest.mark.parametrize("k", [2, 3])
    def test_gw_projected(self, er_graph, k):
        states, report = select_warmstart(
            er_graph, method="gw_projected", k=k, attempts=4, seed=0
        )
        assert report.method == "gw_projected"
        assert report.rank == k
        assert len(states) == 5

    def test_kappa_omitted_for_edgeless_graph(self):
        g = WeightedGraph.from_edges(3, [])
        _, report = select_warmstart(g, attempts=1, rotations_per_solution=1)
        assert report.kappa_close is None
        assert report.kappa_approx is None

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"method": "sdp"},
            {"k": 4},
            {"attempts": 0},
            {"rotations_per_solution": 0},
            {"rotation": "random"},
        ],
    )
    def test_invalid_arguments(self, triangle, kwargs):
        with pytest.raises(InvalidArgumentError):
            select_warmstart(triangle, **kwargs)


def test_rotated_initializations_rejects_unknown_rotation():
    x = RelaxedSolution(np.eye(2))
    with pytest.raises(InvalidArgumentError):
        rotated_initializations(x, "spin", 1)


def test_depth0_expected_cut_of_plus_state(triangle):
    """|+⟩^⊗n samples every cut uniformly: half the total weight."""
    s = BlochAngles.uniform_superposition(3)
    assert depth0_expected_cut(triangle, s) == pytest.approx(1.5)


def test_depth0_ignores_azimuth(er_graph):
    s = random_bloch_angles(er_graph.n, seed=3)
    assert depth0_expected_cut(er_graph, s) == pytest.approx(
        depth0_expected_cut(er_graph, s.dephased())
    )


def test_single_cut_epsilon_state():
    s = single_cut_epsilon_state(Cut.from_bits("010"), 0.3)
    assert np.allclose(s.theta, [0.3, math.pi - 0.3, 0.3])
    assert np.all(s.phi == 0.0)
    with pytest.raises(InvalidArgumentError):
        single_cut_epsilon_state(Cut.from_bits("01"), 2.0)


def test_single_cut_epsilon_zero_is_exact_cut(square):
    s = single_cut_epsilon_state(Cut.from_bits("0101"), 0.0)
    assert depth0_expected_cut(square, s) == pytest.approx(4.0)


def test_random_bloch_angles_reproducible():
    first = random_bloch_angles(5, seed=10)
    second = random_bloch_angles(5, seed=10)
    assert np.array_equal(first.theta, second.theta)


@pytest.mark.parametrize("k, expected", [(2, 0.75), (3, 2 / 3)])
def test_averaged_flip_probability_antipodal(k, expected):
    assert averaged_flip_probability(k, math.pi) == pytest.approx(expected)


def test_averaged_flip_probability_domain():
    with pytest.raises(InvalidArgumentError):
        averaged_flip_probability(4, 1.0)


def test_averaged_bound_triangle(triangle):
    """Three vectors at 120°: 3 · ½(1 + 1/(2k))."""
    angles = np.array([0.0, 2 * math.pi / 3, 4 * math.pi / 3])
    x = RelaxedSolution(np.column_stack([np.cos(angles), np.sin(angles)]))
    assert averaged_depth0_bound(triangle, x) == pytest.approx(1.875)


def _nonnegative_instance(seed: int):
    return generate_erdos_renyi(6, 0.6, WeightLaw.parse("uniform:0,1"), seed=seed)


@pytest.mark.slow
@pytest.mark.parametrize("k", [2, 3])
@pytest.mark.parametrize("seed", range(10))
def test_rotation_average_matches_closed_form(seed, k):
    """Monte-Carlo average over uniform rotations converges to Σ w f_k(θ)."""
    g = _nonnegative_instance(seed)
    x = bm_local_solve(g, k, seed=seed)
    estimate = rotation_averaged_depth0(g, x, 10_000, seed=seed + 100)
    assert estimate == pytest.approx(averaged_depth0_bound(g, x), rel=0.01)


@pytest.mark.parametrize("k, factor", [(2, 3 / 4), (3, 2 / 3)])
@pytest.mark.parametrize("seed", range(10))
def test_rotation_average_bounds_hyperplane_rounding(seed, k, factor):
    """Rank 2 keeps 3/4 and rank 3 keeps 2/3 of the hyperplane expectation."""
    g = _nonnegative_instance(seed)
    x = bm_local_solve(g, k, seed=seed)
    bound = factor * hyperplane_expected_cut(g, x)
    assert averaged_depth0_bound(g, x) >= bound - 1e-12


def test_single_cut_epsilon_single_edge():
    """Cut 01 of one edge: cos⁴(ε/2) + sin⁴(ε/2)."""
    g = WeightedGraph.from_edges(2, [(0, 1, 1.0)])
    eps = 0.7
    s = single_cut_epsilon_state(Cut.from_bits("01"), eps)
    expected = math.cos(eps / 2) ** 4 + math.sin(eps / 2) ** 4
    assert depth0_expected_cut(g, s) == pytest.approx(expected)


def test_single_cut_epsilon_equator(er_graph):
    s = single_cut_epsilon_state(Cut.from_index(5, er_graph.n), math.pi / 2)
    assert depth0_expected_cut(er_graph, s) == pytest.approx(er_graph.total_weight / 2)


@pytest.mark.parametrize("eps", [0.1, 0.5, 1.2])
def test_single_cut_epsilon_lower_bound(er_graph, eps):
    """The depth-0 cut keeps at least cos^n(ε/2) of the seeded cut."""
    c = brute_force_extremes(er_graph).max_witness
    s = single_cut_epsilon_state(c, eps)
    bound = math.cos(eps / 2) ** er_graph.n * cut_value(er_graph, c)
    assert depth0_expected_cut(er_graph, s) >= bound - 1e-12
