"""Sweep Runner - lowest eigenvalue of each closed-form branch versus barrier height."""

import logging
import math
from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import Callable, Dict, List, Optional

import numpy as np

from core.settings import settings
from projects.proximity_wells.models import BranchLabel, EnergyWindow, SweepRow, SweepTable
from projects.proximity_wells.solvers.dispersion import (
    dirichlet_above_v,
    reduced_2p,
    reduced_3p,
    u_dirichlet_1p,
    u_neumann_1p,
)
from projects.proximity_wells.solvers.eigensolve import find_roots

logger = logging.getLogger(__name__)

BELOW_BARRIER_BRANCHES: Dict[BranchLabel, Callable] = {
    BranchLabel.ONE_PERIOD_NEUMANN: u_neumann_1p,
    BranchLabel.REDUCED_MULTI_PERIOD_2: reduced_2p,
    BranchLabel.REDUCED_MULTI_PERIOD_3: reduced_3p,
}

BRANCH_ORDER = list(BranchLabel)


def sweep_potentials(v_min: float, v_max: float, steps: int) -> np.ndarray:
    """Uniform barrier heights from v_min to v_max inclusive."""
    if not v_min < v_max:
        raise ValueError(f"v_min must be below v_max, got ({v_min}, {v_max})")
    if steps < 2:
        raise ValueError(f"steps must be >= 2, got {steps}")
    return np.linspace(v_min, v_max, steps)


def _lowest_root(residual: Callable, V: float, lo: float, hi: float, grid_points: Optional[int]) -> Optional[float]:
    window = EnergyWindow(lo=lo, hi=hi, grid_points=grid_points)
    roots = find_roots(lambda energies: residual(energies, V), window)
    return roots[0][0] if roots else None


def branch_rows(V: float, grid_points: Optional[int] = None) -> List[SweepRow]:
    """Lowest root of every branch at one barrier height, in branch order.

    The one-period Dirichlet branch continues above the barrier when no state lies below V;
    every eigenvalue lies below V + pi^2/4, which bounds the above-barrier window.
    """
    rows: List[SweepRow] = []
    if V > 0:
        energy = _lowest_root(u_dirichlet_1p, V, 0.0, V, grid_points)
        if energy is not None:
            rows.append(SweepRow(potential=V, energy=energy, branch=BranchLabel.ONE_PERIOD_DIRICHLET))

    if not rows:
        energy = _lowest_root(dirichlet_above_v, V, V, V + math.pi**2 / 4 + 1.0, grid_points)
        if energy is not None:
            rows.append(SweepRow(potential=V, energy=energy, branch=BranchLabel.DIRICHLET_ABOVE_V))

    if V > 0:
        for branch, residual in BELOW_BARRIER_BRANCHES.items():
            energy = _lowest_root(residual, V, 0.0, V, grid_points)
            if energy is not None:
                rows.append(SweepRow(potential=V, energy=energy, branch=branch))

    rows.sort(key=lambda row: BRANCH_ORDER.index(row.branch))
    return rows


def run_sweep(
    v_min: Optional[float] = None,
    v_max: Optional[float] = None,
    steps: Optional[int] = None,
    grid_points: Optional[int] = None,
    max_workers: Optional[int] = None,
) -> SweepTable:
    """Energy-versus-potential table over a grid of barrier heights.

    Args:
        v_min: Lowest barrier height (default from settings)
        v_max: Highest barrier height (default from settings)
        steps: Number of barrier heights (default from settings)
        grid_points: Scan grid override for every root search
        max_workers: Thread pool size (default from settings)

    Returns:
        Rows ordered by V, then by branch
    """
    potentials = sweep_potentials(
        settings.sweep_v_min if v_min is None else v_min,
        settings.sweep_v_max if v_max is None else v_max,
        steps or settings.sweep_steps,
    )
    logger.info(f"Sweeping {len(potentials)} barrier heights from {potentials[0]:g} to {potentials[-1]:g}")

    by_potential: Dict[float, List[SweepRow]] = {}
    with ThreadPoolExecutor(max_workers=max_workers or settings.max_parallel_workers) as executor:
        futures = {executor.submit(branch_rows, float(V), grid_points): float(V) for V in potentials}
        for future in as_completed(futures):
            by_potential[futures[future]] = future.result()

    rows = [row for V in sorted(by_potential) for row in by_potential[V]]
    return SweepTable(rows=rows)
