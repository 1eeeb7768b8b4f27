"""Eigenvalue search: scan a residual for sign changes, refine each bracket by bisection."""

import logging
from typing import Callable, List, Optional, Tuple

import numpy as np

from core.errors import BisectionError
from core.settings import settings
from projects.proximity_wells.models import (
    BoundaryCondition,
    Eigenvalue,
    EnergyWindow,
    Normalization,
    PotentialStack,
)
from projects.proximity_wells.solvers.propagate import mismatch_values
from projects.proximity_wells.solvers.stack import make_periodic_bilayer
from projects.proximity_wells.solvers.wavefunction import build_wavefunction, count_nodes

logger = logging.getLogger(__name__)

Residual = Callable[[np.ndarray], np.ndarray]
Bracket = Tuple[float, float]


def scan_grid(window: EnergyWindow) -> np.ndarray:
    """Uniform energy grid over the window, inset from both ends.

    The inset keeps the grid off E = 0 (where the Dirichlet start vector makes the mismatch
    vanish trivially) and off a window edge placed at a barrier top.
    """
    inset = settings.window_inset * max(1.0, abs(window.hi))
    lo, hi = window.lo + inset, window.hi - inset
    if window.grid_points is not None:
        n = window.grid_points
    else:
        n = settings.scan_points_for(window.width)
        if n == settings.max_scan_points:
            logger.warning(
                f"Scan grid capped at {n} points for window width {window.width:g}; "
                "closely spaced roots may be missed"
            )
    return np.linspace(lo, hi, n)


def scan_brackets(residual: Residual, grid: np.ndarray) -> List[Bracket]:
    """Adjacent grid pairs with opposite residual signs; exact zeros give zero-width brackets."""
    values = np.asarray(residual(grid), dtype=float)
    signs = np.sign(values)
    signs[~np.isfinite(values)] = 0

    brackets: List[Bracket] = [(float(grid[i]), float(grid[i])) for i in np.flatnonzero(values == 0.0)]
    changes = np.flatnonzero(signs[:-1] * signs[1:] < 0)
    brackets.extend((float(grid[i]), float(grid[i + 1])) for i in changes)
    brackets.sort()

    logger.debug(f"Scanned {len(grid)} points, {len(brackets)} brackets")
    return brackets


def _evaluate(residual: Residual, x: float) -> float:
    return float(np.asarray(residual(np.array([x])), dtype=float)[0])


def _bisect(residual: Residual, lo: float, hi: float) -> Optional[Tuple[float, float, float, float]]:
    f_lo, f_hi = _evaluate(residual, lo), _evaluate(residual, hi)
    if lo == hi:
        return lo, hi, f_lo, f_hi

    for iteration in range(settings.max_bisection_iterations):
        mid = 0.5 * (lo + hi)
        narrow = hi - lo <= settings.bisection_rel_tol * max(1.0, abs(mid))
        small = min(abs(f_lo), abs(f_hi)) < settings.root_residual_tol
        if (narrow and small) or mid in (lo, hi):
            logger.debug(f"Bracket converged after {iteration} iterations at {mid!r}")
            return lo, hi, f_lo, f_hi

        f_mid = _evaluate(residual, mid)
        if f_mid == 0.0:
            return mid, mid, f_mid, f_mid
        if np.sign(f_mid) == np.sign(f_lo):
            lo, f_lo = mid, f_mid
        else:
            hi, f_hi = mid, f_mid

    return None


def bisect_bracket(residual: Residual, lo: float, hi: float) -> Optional[Bracket]:
    """Shrink a sign-change bracket until it meets the relative tolerance and one end has a
    residual below ``root_residual_tol``, or until its ends are adjacent floats.

    Returns:
        Final (lo, hi), or None if the iteration cap was hit first
    """
    refined = _bisect(residual, lo, hi)
    return None if refined is None else (refined[0], refined[1])


def find_roots(residual: Residual, window: EnergyWindow) -> List[Tuple[float, Bracket]]:
    """All simple roots of a vectorized residual in the window, in increasing order.

    Args:
        residual: Function of an energy array returning a residual array
        window: Energy interval and optional grid size

    Returns:
        (root, final bracket) pairs, deduplicated

    Raises:
        BisectionError: If any bracket fails to converge; carries the offending brackets
    """
    roots: List[Tuple[float, Bracket]] = []
    failed: List[Bracket] = []

    for lo, hi in scan_brackets(residual, scan_grid(window)):
        refined = _bisect(residual, lo, hi)
        if refined is None:
            logger.warning(f"Bisection did not converge on bracket ({lo!r}, {hi!r})")
            failed.append((lo, hi))
            continue
        a, b, f_a, f_b = refined
        root = a if abs(f_a) <= abs(f_b) else b
        if roots and abs(root - roots[-1][0]) < settings.root_dedup_tol:
            continue
        roots.append((root, (a, b)))

    if failed:
        raise BisectionError(f"{len(failed)} bracket(s) failed to converge", failed)
    return roots


def classify(stack: PotentialStack, energy: float, bracket: Bracket) -> Eigenvalue:
    """Attach node count and proximity flags to a refined root."""
    nodes = count_nodes(build_wavefunction(stack, energy, Normalization.RAW))
    return Eigenvalue(
        energy=energy,
        bracket=bracket,
        node_count=nodes,
        proximity_valid=nodes == 0,
        below_barrier=energy < stack.max_potential,
    )


def find_eigenvalues(stack: PotentialStack, window: EnergyWindow) -> List[Eigenvalue]:
    """Eigenvalues of the stack inside the window, in increasing order."""
    roots = find_roots(lambda energies: mismatch_values(stack, energies), window)
    logger.info(f"Found {len(roots)} eigenvalue(s) in ({window.lo:g}, {window.hi:g})")
    return [classify(stack, energy, bracket) for energy, bracket in roots]


def lowest_eigenvalue(stack: PotentialStack, window: EnergyWindow) -> Optional[Eigenvalue]:
    """Lowest eigenvalue in the window, or None when the window holds none."""
    found = find_eigenvalues(stack, window)
    return found[0] if found else None


def _binds_below_barrier(periods: int, V: float) -> bool:
    stack = make_periodic_bilayer(periods, V, BoundaryCondition.DIRICHLET)
    return bool(find_roots(lambda energies: mismatch_values(stack, energies), EnergyWindow(lo=0.0, hi=V)))


def dirichlet_threshold(periods: int = 1, tol: float = 1e-6) -> float:
    """Smallest barrier V at which the Dirichlet N-period stack has a state below V.

    Args:
        periods: Number of periods
        tol: Width of the final V bracket

    Returns:
        Midpoint of the final bracket
    """
    if tol <= 0:
        raise ValueError(f"tol must be positive, got {tol}")

    # every stack binds below V once V exceeds the infinite-barrier energy pi^2
    hi = 10.0
    lo = hi / 2
    while _binds_below_barrier(periods, lo):
        hi, lo = lo, lo / 2

    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if _binds_below_barrier(periods, mid):
            hi = mid
        else:
            lo = mid

    logger.debug(f"Dirichlet threshold for {periods} period(s) bracketed in ({lo!r}, {hi!r})")
    return 0.5 * (lo + hi)
