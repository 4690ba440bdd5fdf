"""Warm-starts: low-rank Max-Cut relaxations mapped onto product states."""

from .bloch import (
    averaged_flip_probability,
    depth0_expected_cut,
    random_bloch_angles,
    single_cut_epsilon_state,
)
from .models import BlochAngles, RelaxedSolution, WarmstartReport
from .relaxation import (
    best_hyperplane_cut,
    bm_local_solve,
    bm_objective,
    hyperplane_expected_cut,
    hyperplane_round,
    sample_hyperplane_cut_values,
    sdp_rank,
    sdp_solve,
    two_step_cut_values,
)
from .rotations import (
    project_to_subspace,
    rotate_uniform,
    rotate_vertex_at_top,
    to_bloch,
)
from .selection import (
    averaged_depth0_bound,
    rotated_initializations,
    rotation_averaged_depth0,
    select_warmstart,
)

__all__ = [
    "RelaxedSolution",
    "BlochAngles",
    "WarmstartReport",
    "bm_objective",
    "hyperplane_expected_cut",
    "hyperplane_round",
    "sample_hyperplane_cut_values",
    "two_step_cut_values",
    "best_hyperplane_cut",
    "bm_local_solve",
    "sdp_rank",
    "sdp_solve",
    "project_to_subspace",
    "rotate_uniform",
    "rotate_vertex_at_top",
    "to_bloch",
    "averaged_flip_probability",
    "depth0_expected_cut",
    "single_cut_epsilon_state",
    "random_bloch_angles",
    "select_warmstart",
    "rotated_initializations",
    "rotation_averaged_depth0",
    "averaged_depth0_bound",
]
