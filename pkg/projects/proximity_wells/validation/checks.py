"""Solver cross-checks: closed-form agreement, eigenvalue properties and wavefunction shape."""

from itertools import product
from typing import List, Optional

import numpy as np
from scipy.optimize import brentq

from projects.proximity_wells.config.reference_cases import (
    DIRICHLET_THRESHOLD,
    DIRICHLET_THRESHOLD_TOLERANCE,
    FACTORIZATION_TOL,
    INFINITE_BARRIER_GROUND,
    INFINITE_BARRIER_POTENTIAL,
    REFERENCE_CASES,
    REFERENCE_TOLERANCE,
    ROOT_AGREEMENT_TOL,
    SQUARE_WELL_GROUND,
)
from projects.proximity_wells.models import (
    BoundaryCondition,
    CheckFailure,
    EnergyWindow,
    Layer,
    Normalization,
    PotentialStack,
    ValidationScope,
)
from projects.proximity_wells.solvers.dispersion import (
    closed_form_residual,
    factored_full,
    one_period_dirichlet_threshold,
    u_dirichlet_1p,
    u_neumann_1p,
)
from projects.proximity_wells.solvers.eigensolve import (
    dirichlet_threshold,
    find_eigenvalues,
    find_roots,
    lowest_eigenvalue,
    scan_grid,
)
from projects.proximity_wells.solvers.propagate import layer_propagator, mismatch_values
from projects.proximity_wells.solvers.stack import make_periodic_bilayer
from projects.proximity_wells.solvers.wavefunction import (
    build_wavefunction,
    count_nodes,
    evaluate,
    period_amplitude_ratios,
)

BOUNDARY_CONDITIONS = (BoundaryCondition.DIRICHLET, BoundaryCondition.NEUMANN)
CLOSED_FORM_PERIODS = (1, 2, 3)
N_INDEPENDENCE_PERIODS = (1, 2, 3, 4, 5)


def _solver_roots(stack: PotentialStack, window: EnergyWindow) -> List[float]:
    return [root for root, _ in find_roots(lambda energies: mismatch_values(stack, energies), window)]


def _lowest(periods: int, V: float, bc: BoundaryCondition) -> Optional[float]:
    found = lowest_eigenvalue(make_periodic_bilayer(periods, V, bc), EnergyWindow(lo=0.0, hi=V))
    return found.energy if found else None


def check_oracle_equivalence(scope: ValidationScope) -> List[CheckFailure]:
    """Transfer-matrix roots in (0, V) match the closed-form roots elementwise."""
    failures = []
    periods = [n for n in scope.periods if n in CLOSED_FORM_PERIODS]
    for n, bc, V in product(periods, BOUNDARY_CONDITIONS, scope.potentials):
        window = EnergyWindow(lo=0.0, hi=V)
        solver = _solver_roots(make_periodic_bilayer(n, V, bc), window)
        oracle = [root for root, _ in find_roots(lambda E: closed_form_residual(E, V, n, bc), window)]

        if len(solver) != len(oracle):
            failures.append(CheckFailure(
                periods=n, bc=bc, potential=V,
                message=f"solver found {len(solver)} roots, closed form {len(oracle)}",
            ))
            continue
        for ours, theirs in zip(solver, oracle):
            if abs(ours - theirs) > ROOT_AGREEMENT_TOL:
                failures.append(CheckFailure(
                    periods=n, bc=bc, potential=V, energy=ours,
                    message=f"closed-form root {theirs!r} differs by {abs(ours - theirs):.2e}",
                ))
    return failures


def _polish(residual, lo: float, hi: float) -> float:
    """Refine a converged bracket to machine precision."""
    if lo == hi:
        return lo
    return brentq(residual, lo, hi, xtol=1e-15, rtol=4 * np.finfo(float).eps)


def check_factorization(scope: ValidationScope) -> List[CheckFailure]:
    """One-period eigenvalues solve the two- and three-period equations and stacks."""
    failures = []
    one_period = {BoundaryCondition.DIRICHLET: u_dirichlet_1p, BoundaryCondition.NEUMANN: u_neumann_1p}
    for bc, V in product(BOUNDARY_CONDITIONS, scope.factorization_potentials):
        window = EnergyWindow(lo=0.0, hi=V)
        grid = scan_grid(window)
        factor = one_period[bc]

        for _, (lo, hi) in find_roots(lambda E: factor(E, V), window):
            root = _polish(lambda E: factor(E, V), lo, hi)
            for n in (2, 3):
                scale = float(np.max(np.abs(factored_full(grid, V, n, bc))))
                relative = abs(factored_full(root, V, n, bc)) / scale
                if relative > FACTORIZATION_TOL:
                    failures.append(CheckFailure(
                        periods=n, bc=bc, potential=V, energy=root,
                        message=f"full equation residual {relative:.2e} relative to its scale",
                    ))
                solver = _solver_roots(make_periodic_bilayer(n, V, bc), window)
                if not any(abs(E - root) <= ROOT_AGREEMENT_TOL for E in solver):
                    failures.append(CheckFailure(
                        periods=n, bc=bc, potential=V, energy=root,
                        message="one-period eigenvalue missing from the multi-period stack",
                    ))
    return failures


def check_neumann_n_independence(scope: ValidationScope) -> List[CheckFailure]:
    """Lowest Neumann eigenvalue does not depend on the number of periods."""
    failures = []
    for V in scope.potentials:
        reference = _lowest(1, V, BoundaryCondition.NEUMANN)
        for n in sorted(set(N_INDEPENDENCE_PERIODS) | set(scope.periods)):
            energy = _lowest(n, V, BoundaryCondition.NEUMANN)
            if reference is None or energy is None or abs(energy - reference) > ROOT_AGREEMENT_TOL:
                failures.append(CheckFailure(
                    periods=n, bc=BoundaryCondition.NEUMANN, potential=V, energy=energy,
                    message=f"lowest eigenvalue differs from the one-period value {reference!r}",
                ))
    return failures


def check_dirichlet_monotonicity(scope: ValidationScope) -> List[CheckFailure]:
    """Lowest Dirichlet eigenvalue strictly decreases as periods are added."""
    failures = []
    for V in scope.potentials:
        energies = [_lowest(n, V, BoundaryCondition.DIRICHLET) for n in CLOSED_FORM_PERIODS]
        if energies[0] is None:
            continue
        for n, (upper, lower) in enumerate(zip(energies, energies[1:]), start=2):
            if lower is None or upper is None or not lower < upper:
                failures.append(CheckFailure(
                    periods=n, bc=BoundaryCondition.DIRICHLET, potential=V, energy=lower,
                    message=f"not below the {n - 1}-period value {upper!r}",
                ))
    return failures


def check_boundary_ordering(scope: ValidationScope) -> List[CheckFailure]:
    """Lowest Neumann eigenvalue lies below the lowest Dirichlet one."""
    failures = []
    for n, V in product(scope.periods, scope.potentials):
        neumann = _lowest(n, V, BoundaryCondition.NEUMANN)
        dirichlet = _lowest(n, V, BoundaryCondition.DIRICHLET)
        if neumann is not None and dirichlet is not None and not neumann < dirichlet:
            failures.append(CheckFailure(
                periods=n, potential=V, energy=neumann,
                message=f"Neumann eigenvalue not below Dirichlet {dirichlet!r}",
            ))
    return failures


def check_reference_eigenvalues(scope: ValidationScope) -> List[CheckFailure]:
    """Two-decimal eigenvalues of the reference configurations."""
    failures = []
    for case in REFERENCE_CASES:
        if case.periods not in scope.periods or case.potential not in scope.potentials:
            continue
        stack = make_periodic_bilayer(case.periods, case.potential, case.bc)
        found = [ev.energy for ev in find_eigenvalues(stack, EnergyWindow(lo=0.0, hi=case.potential))]

        if case.exact_set and len(found) != len(case.expected):
            failures.append(CheckFailure(
                periods=case.periods, bc=case.bc, potential=case.potential,
                message=f"expected {len(case.expected)} eigenvalues, found {found}",
            ))
        for expected in case.expected:
            if not any(abs(E - expected) <= REFERENCE_TOLERANCE for E in found):
                failures.append(CheckFailure(
                    periods=case.periods, bc=case.bc, potential=case.potential, energy=expected,
                    message=f"no eigenvalue within {REFERENCE_TOLERANCE} (found {found})",
                ))
        if not case.exact_set and found and abs(found[0] - case.expected[0]) > REFERENCE_TOLERANCE:
            failures.append(CheckFailure(
                periods=case.periods, bc=case.bc, potential=case.potential, energy=found[0],
                message=f"lowest eigenvalue is not {case.expected[0]}",
            ))
    return failures


def check_dirichlet_threshold(scope: ValidationScope) -> List[CheckFailure]:
    """Barrier height where the first one-period Dirichlet state drops below V."""
    failures = []
    bisected = dirichlet_threshold(1, tol=1e-6)
    limit = one_period_dirichlet_threshold()
    if abs(bisected - DIRICHLET_THRESHOLD) > DIRICHLET_THRESHOLD_TOLERANCE:
        failures.append(CheckFailure(periods=1, bc=BoundaryCondition.DIRICHLET, potential=bisected,
                                     message=f"threshold not within {DIRICHLET_THRESHOLD_TOLERANCE} of 4.12"))
    if abs(bisected - limit) > 1e-5:
        failures.append(CheckFailure(periods=1, bc=BoundaryCondition.DIRICHLET, potential=bisected,
                                     message=f"threshold disagrees with the q -> 0 limit {limit!r}"))
    return failures


def check_limits(scope: ValidationScope) -> List[CheckFailure]:
    """Square-well, infinite-barrier and vanishing-barrier limits."""
    failures = []
    dirichlet, neumann = BoundaryCondition.DIRICHLET, BoundaryCondition.NEUMANN

    square = lowest_eigenvalue(make_periodic_bilayer(1, 0.0, dirichlet), EnergyWindow(lo=0.0, hi=12.0))
    if square is None or abs(square.energy - SQUARE_WELL_GROUND) > 1e-8:
        failures.append(CheckFailure(periods=1, bc=dirichlet, potential=0.0,
                                     energy=square.energy if square else None,
                                     message=f"expected pi^2/4 = {SQUARE_WELL_GROUND!r}"))

    deep = lowest_eigenvalue(
        make_periodic_bilayer(1, INFINITE_BARRIER_POTENTIAL, dirichlet), EnergyWindow(lo=0.0, hi=12.0)
    )
    if deep is None or abs(deep.energy - INFINITE_BARRIER_GROUND) > 0.01 * INFINITE_BARRIER_GROUND:
        failures.append(CheckFailure(periods=1, bc=dirichlet, potential=INFINITE_BARRIER_POTENTIAL,
                                     energy=deep.energy if deep else None,
                                     message="not within 1% of pi^2"))

    shallow = _lowest(1, 1e-3, neumann)
    if shallow is None or shallow >= 1e-3:
        failures.append(CheckFailure(periods=1, bc=neumann, potential=1e-3, energy=shallow,
                                     message="lowest Neumann eigenvalue does not vanish with V"))
    return failures


def _interior_points(stack: PotentialStack, rng: np.random.Generator, count: int) -> np.ndarray:
    edges = np.asarray(stack.boundaries)
    xs = rng.uniform(0.0, stack.total_width, 4 * count)
    distance = np.min(np.abs(xs[:, None] - edges[None, :]), axis=1)
    return xs[distance > 1e-3][:count]


def check_wavefunctions(scope: ValidationScope) -> List[CheckFailure]:
    """Continuity, Schrodinger residual, normalization and Neumann self-similarity."""
    failures = []
    rng = np.random.default_rng(scope.seed)
    periods = [n for n in scope.periods if n in CLOSED_FORM_PERIODS]

    for n, bc, V in product(periods, BOUNDARY_CONDITIONS, scope.potentials):
        stack = make_periodic_bilayer(n, V, bc)
        for ev in find_eigenvalues(stack, EnergyWindow(lo=0.0, hi=V)):
            wf = build_wavefunction(stack, ev.energy, Normalization.L2_UNIT)

            def fail(message: str) -> None:
                failures.append(CheckFailure(periods=n, bc=bc, potential=V, energy=ev.energy, message=message))

            dense = np.linspace(0.0, stack.total_width, 10_000 * int(stack.total_width) + 1)
            psi, dpsi = evaluate(wf, dense)
            interfaces = np.asarray(stack.boundaries[1:-1])
            left_psi, left_dpsi = evaluate(wf, interfaces - 1e-8)
            right_psi, right_dpsi = evaluate(wf, interfaces + 1e-8)
            if np.max(np.abs(left_psi - right_psi), initial=0.0) > 1e-6 * np.max(np.abs(psi)):
                fail("psi jumps at an interface")
            if np.max(np.abs(left_dpsi - right_dpsi), initial=0.0) > 1e-6 * np.max(np.abs(dpsi)):
                fail("dpsi jumps at an interface")

            norm = np.trapezoid(psi**2, dense)
            if abs(norm - 1.0) > 1e-8:
                fail(f"L2 norm {norm!r} differs from 1")

            xs = _interior_points(stack, rng, 100)
            h = 1e-5
            curvature = (evaluate(wf, xs + h)[1] - evaluate(wf, xs - h)[1]) / (2 * h)
            potentials = stack.potentials[np.searchsorted(stack.boundaries, xs, side="right") - 1]
            expected = (potentials - ev.energy) * evaluate(wf, xs)[0]
            if np.max(np.abs(curvature - expected)) > 1e-8 * max(1.0, float(np.max(np.abs(expected)))):
                fail("psi'' differs from (V - E) psi")

            if count_nodes(build_wavefunction(stack, ev.energy, Normalization.MAX_UNIT)) != ev.node_count:
                fail("node count depends on normalization")

        if bc == BoundaryCondition.NEUMANN:
            lowest = lowest_eigenvalue(stack, EnergyWindow(lo=0.0, hi=V))
            if lowest is None or lowest.node_count != 0:
                failures.append(CheckFailure(periods=n, bc=bc, potential=V,
                                             message="lowest Neumann state has a node"))
                continue
            ratios = period_amplitude_ratios(build_wavefunction(stack, lowest.energy))
            if ratios and (max(ratios) - min(ratios) > 1e-6 * max(ratios) or not 0 < ratios[0] < 1):
                failures.append(CheckFailure(periods=n, bc=bc, potential=V, energy=lowest.energy,
                                             message=f"period ratios {ratios} are not one constant in (0, 1)"))
    return failures


def check_unimodularity(scope: ValidationScope) -> List[CheckFailure]:
    """Layer propagators have unit determinant over random layers and energies."""
    failures = []
    rng = np.random.default_rng(scope.seed)
    for V, w, E in zip(rng.uniform(0, 50, 500), rng.uniform(0.1, 4, 500), rng.uniform(0, 60, 500)):
        m = layer_propagator(Layer(potential=float(V), width=float(w)), float(E))
        scale = max(1.0, abs(m.m11 * m.m22))
        if abs(m.determinant - 1.0) > 1e-12 * scale:
            failures.append(CheckFailure(potential=V, energy=E,
                                         message=f"determinant {m.determinant!r} for width {w!r}"))
    return failures
