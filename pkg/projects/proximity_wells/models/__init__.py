"""Proximity Wells Models."""

from .well_models import (
    BoundaryCondition,
    BranchLabel,
    CheckFailure,
    CheckOutcome,
    Eigenvalue,
    EnergyWindow,
    KQPair,
    Layer,
    LayerPropagator,
    MismatchResult,
    MismatchSign,
    Normalization,
    PiecewiseWavefunction,
    PotentialStack,
    StateVector,
    SweepRow,
    SweepTable,
    ValidationReport,
    ValidationScope,
)

__all__ = [
    "BoundaryCondition",
    "BranchLabel",
    "CheckFailure",
    "CheckOutcome",
    "Eigenvalue",
    "EnergyWindow",
    "KQPair",
    "Layer",
    "LayerPropagator",
    "MismatchResult",
    "MismatchSign",
    "Normalization",
    "PiecewiseWavefunction",
    "PotentialStack",
    "StateVector",
    "SweepRow",
    "SweepTable",
    "ValidationReport",
    "ValidationScope",
]
