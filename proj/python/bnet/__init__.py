"""Boolean network analysis: dynamics, signed cycles, fixed-point bounds."""

from ._core import (
    attractors,
    code_params,
    coding_bound,
    cycle_network,
    estimate_phi,
    feedback_bound,
    fixed_points,
    graph_stats,
    interaction_graph,
    max_fixed_points,
    render_table,
    signed_cycles,
    verify_exhaustive,
    verify_sampled,
)

__all__ = [
    "attractors",
    "code_params",
    "coding_bound",
    "cycle_network",
    "estimate_phi",
    "feedback_bound",
    "fixed_points",
    "graph_stats",
    "interaction_graph",
    "max_fixed_points",
    "render_table",
    "signed_cycles",
    "verify_exhaustive",
    "verify_sampled",
]
