"""Proximity Wells Validation Checks Registration."""

from core.checks import check_registry
from .checks import (
    check_boundary_ordering,
    check_dirichlet_monotonicity,
    check_dirichlet_threshold,
    check_factorization,
    check_limits,
    check_neumann_n_independence,
    check_oracle_equivalence,
    check_reference_eigenvalues,
    check_unimodularity,
    check_wavefunctions,
)

CATEGORY = "proximity_wells"

check_registry.register(
    "oracle_equivalence", "Closed-form agreement",
    "Transfer-matrix roots match the one-, two- and three-period closed forms",
    CATEGORY, check_oracle_equivalence,
)
check_registry.register(
    "factorization", "Factorization",
    "One-period eigenvalues are eigenvalues of the two- and three-period stacks",
    CATEGORY, check_factorization,
)
check_registry.register(
    "neumann_n_independence", "Neumann N-independence",
    "Lowest Neumann eigenvalue is the same for every number of periods",
    CATEGORY, check_neumann_n_independence,
)
check_registry.register(
    "dirichlet_monotonicity", "Dirichlet monotonicity",
    "Lowest Dirichlet eigenvalue decreases as periods are added",
    CATEGORY, check_dirichlet_monotonicity,
)
check_registry.register(
    "boundary_ordering", "Boundary-condition ordering",
    "Lowest Neumann eigenvalue lies below the lowest Dirichlet eigenvalue",
    CATEGORY, check_boundary_ordering,
)
check_registry.register(
    "reference_eigenvalues", "Reference eigenvalues",
    "Two-decimal eigenvalues of the reference bilayers",
    CATEGORY, check_reference_eigenvalues,
)
check_registry.register(
    "dirichlet_threshold", "Dirichlet threshold",
    "Barrier height at which a one-period Dirichlet state first lies below V",
    CATEGORY, check_dirichlet_threshold,
)
check_registry.register(
    "limits", "Limits",
    "Square-well, infinite-barrier and vanishing-barrier limits",
    CATEGORY, check_limits,
)
check_registry.register(
    "wavefunctions", "Wavefunctions",
    "Continuity, Schrodinger residual, normalization, nodes and period ratios",
    CATEGORY, check_wavefunctions,
)
check_registry.register(
    "unimodularity", "Unimodularity",
    "Layer propagators have unit determinant",
    CATEGORY, check_unimodularity,
)

__all__ = ["CATEGORY"]
