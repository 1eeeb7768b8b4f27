"""Proximity Wells Runners."""

from .sweep_runner import branch_rows, run_sweep, sweep_potentials
from .validation_runner import run_validation

__all__ = [
    "branch_rows",
    "run_sweep",
    "run_validation",
    "sweep_potentials",
]
