"""Proximity Wells Solvers."""

from .dispersion import (
    closed_form_residual,
    dirichlet_above_v,
    factored_full,
    kq_pair,
    one_period_dirichlet_threshold,
    reduced_2p,
    reduced_3p,
    u_dirichlet_1p,
    u_neumann_1p,
)
from .eigensolve import (
    dirichlet_threshold,
    find_eigenvalues,
    find_roots,
    lowest_eigenvalue,
)
from .propagate import layer_propagator, mismatch, mismatch_sign_profile, mismatch_values
from .stack import layer_at, make_periodic_bilayer, make_stack, parse_layers
from .wavefunction import (
    build_wavefunction,
    count_nodes,
    evaluate,
    gap_minimum,
    layer_probabilities,
    period_amplitude_ratios,
    sample,
)

__all__ = [
    "build_wavefunction",
    "closed_form_residual",
    "count_nodes",
    "dirichlet_above_v",
    "dirichlet_threshold",
    "evaluate",
    "factored_full",
    "find_eigenvalues",
    "find_roots",
    "gap_minimum",
    "kq_pair",
    "layer_at",
    "layer_probabilities",
    "layer_propagator",
    "lowest_eigenvalue",
    "make_periodic_bilayer",
    "make_stack",
    "mismatch",
    "mismatch_sign_profile",
    "mismatch_values",
    "one_period_dirichlet_threshold",
    "parse_layers",
    "period_amplitude_ratios",
    "reduced_2p",
    "reduced_3p",
    "sample",
    "u_dirichlet_1p",
    "u_neumann_1p",
]
