"""Piecewise eigenfunctions: construction, sampling, node counting and normalization.

In each layer the eigenfunction is a combination a*f1(t) + b*f2(t) of two basis functions of
the local coordinate t in [0, w], chosen so that both stay bounded on the layer:

    E > V_j:             cos(kt), sin(kt)/k
    E < V_j, qw <= 1:    cosh(qt), sinh(qt)/q
    E < V_j, qw > 1:     exp(-qt), exp(-q(w - t))
    E = V_j:             1, t

The coefficients are the null vector of the boundary and continuity equations.
"""

import logging
import math
from typing import List, Optional, Tuple

import numpy as np
import pandas as pd
from scipy.integrate import quad
from scipy.optimize import minimize_scalar

from core.errors import NotAnEigenvalueError, StackValidationError
from core.settings import settings
from projects.proximity_wells.models import (
    BoundaryCondition,
    Layer,
    Normalization,
    PiecewiseWavefunction,
    PotentialStack,
    StateVector,
)
from projects.proximity_wells.solvers.propagate import degenerate_tolerance
from projects.proximity_wells.solvers.stack import layer_indices

logger = logging.getLogger(__name__)

Coefficients = Tuple[Tuple[float, float], ...]
Basis = Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]


def basis_kind(layer: Layer, energy: float) -> str:
    """Which of the four per-layer bases applies at this energy."""
    u = energy - layer.potential
    if abs(u) < degenerate_tolerance(layer.potential):
        return "linear"
    if u > 0:
        return "trig"
    return "hyperbolic" if math.sqrt(-u) * layer.width <= 1.0 else "exponential"


def _basis(layer: Layer, energy: float, t: np.ndarray) -> Basis:
    """(f1, f2, f1', f2') at local offsets t."""
    t = np.asarray(t, dtype=float)
    kind = basis_kind(layer, energy)

    if kind == "linear":
        return np.ones_like(t), t, np.zeros_like(t), np.ones_like(t)

    if kind == "trig":
        k = math.sqrt(energy - layer.potential)
        c, s = np.cos(k * t), np.sin(k * t)
        return c, t * np.sinc(k * t / np.pi), -k * s, c

    q = math.sqrt(layer.potential - energy)
    if kind == "hyperbolic":
        ch, sh = np.cosh(q * t), np.sinh(q * t)
        return ch, sh / q, q * sh, ch

    left = np.exp(-q * t)
    right = np.exp(-q * (layer.width - t))
    return left, right, -q * left, q * right


def _derivative_scale(layer: Layer, energy: float) -> float:
    return max(1.0, math.sqrt(abs(energy - layer.potential)))


def _boundary_row(layer: Layer, energy: float, t: float, bc: BoundaryCondition) -> np.ndarray:
    f1, f2, g1, g2 = _basis(layer, energy, np.array(t))
    if bc == BoundaryCondition.DIRICHLET:
        return np.array([f1, f2], dtype=float)
    return np.array([g1, g2], dtype=float) / _derivative_scale(layer, energy)


def continuity_system(stack: PotentialStack, energy: float) -> np.ndarray:
    """Square system whose null vector holds the per-layer coefficients.

    Rows: left wall condition, then psi and dpsi continuity at each interface, then the
    right wall condition. Derivative rows are divided by the largest local wavenumber.
    """
    layers = stack.layers
    n = len(layers)
    A = np.zeros((2 * n, 2 * n))

    A[0, 0:2] = _boundary_row(layers[0], energy, 0.0, stack.left_bc)
    for j in range(n - 1):
        here, there = layers[j], layers[j + 1]
        f1, f2, g1, g2 = _basis(here, energy, np.array(here.width))
        h1, h2, p1, p2 = _basis(there, energy, np.array(0.0))
        scale = max(_derivative_scale(here, energy), _derivative_scale(there, energy))

        A[1 + 2 * j, 2 * j : 2 * j + 4] = [f1, f2, -h1, -h2]
        A[2 + 2 * j, 2 * j : 2 * j + 4] = np.array([g1, g2, -p1, -p2]) / scale
    A[-1, -2:] = _boundary_row(layers[-1], energy, layers[-1].width, stack.right_bc)
    return A


def _evaluate(stack: PotentialStack, energy: float, coefficients: Coefficients, xs: np.ndarray):
    idx, t = layer_indices(stack, xs)
    psi = np.zeros_like(t)
    dpsi = np.zeros_like(t)
    for j, layer in enumerate(stack.layers):
        mask = idx == j
        if not mask.any():
            continue
        f1, f2, g1, g2 = _basis(layer, energy, t[mask])
        a, b = coefficients[j]
        psi[mask] = a * f1 + b * f2
        dpsi[mask] = a * g1 + b * g2
    return psi, dpsi


def _node_grid(stack: PotentialStack) -> np.ndarray:
    n = max(2, int(math.ceil(settings.node_samples_per_unit * stack.total_width)) + 1)
    return np.linspace(0.0, stack.total_width, n)


def _square_integrals(stack: PotentialStack, energy: float, coefficients: Coefficients) -> np.ndarray:
    """Per-layer integral of psi^2."""
    totals = []
    for layer, (a, b) in zip(stack.layers, coefficients):

        def density(t: float, layer: Layer = layer, a: float = a, b: float = b) -> float:
            f1, f2, _, _ = _basis(layer, energy, np.array(t))
            return float((a * f1 + b * f2) ** 2)

        value, _ = quad(density, 0.0, layer.width, epsabs=1e-15, epsrel=1e-12, limit=200)
        totals.append(value)
    return np.array(totals)


def _max_abs(stack: PotentialStack, energy: float, coefficients: Coefficients) -> Tuple[float, float]:
    """(x, psi(x)) at the largest |psi|: dense sampling, then bounded refinement."""
    xs = _node_grid(stack)
    psi, _ = _evaluate(stack, energy, coefficients, xs)
    i = int(np.argmax(np.abs(psi)))
    best_x, best_psi = float(xs[i]), float(psi[i])

    lo, hi = float(xs[max(i - 1, 0)]), float(xs[min(i + 1, len(xs) - 1)])
    result = minimize_scalar(
        lambda x: -abs(_evaluate(stack, energy, coefficients, np.array([x]))[0][0]),
        bounds=(lo, hi),
        method="bounded",
        options={"xatol": 1e-12},
    )
    if -result.fun > abs(best_psi):
        best_x = float(result.x)
        best_psi = float(_evaluate(stack, energy, coefficients, np.array([best_x]))[0][0])
    return best_x, best_psi


def default_normalization(stack: PotentialStack) -> Normalization:
    """L2 when both walls are Dirichlet, max-unit otherwise."""
    if stack.left_bc == stack.right_bc == BoundaryCondition.DIRICHLET:
        return Normalization.L2_UNIT
    return Normalization.MAX_UNIT


def build_wavefunction(
    stack: PotentialStack, energy: float, norm: Optional[Normalization] = None
) -> PiecewiseWavefunction:
    """Eigenfunction of the stack at an eigenvalue.

    Args:
        stack: Potential stack
        energy: Eigenvalue, refined to solver precision
        norm: Normalization mode (defaults per ``default_normalization``)

    Returns:
        Wavefunction with psi > 0 where |psi| is largest

    Raises:
        NotAnEigenvalueError: If the continuity system is not singular at this energy
    """
    norm = norm or default_normalization(stack)
    A = continuity_system(stack, energy)

    column_norms = np.linalg.norm(A, axis=0)
    column_norms[column_norms == 0.0] = 1.0
    _, singular, vt = np.linalg.svd(A / column_norms)
    ratio = singular[-1] / singular[0]
    logger.debug(f"Continuity system at E={energy!r}: smallest singular ratio {ratio:.3e}")
    if ratio >= settings.eigen_check_tol:
        raise NotAnEigenvalueError(
            f"E={energy!r} is not an eigenvalue of the stack (singular ratio {ratio:.3e})"
        )

    raw = vt[-1] / column_norms
    coefficients: Coefficients = tuple((float(raw[2 * j]), float(raw[2 * j + 1])) for j in range(len(stack.layers)))

    _, peak = _max_abs(stack, energy, coefficients)
    if norm == Normalization.L2_UNIT:
        factor = math.copysign(1.0 / math.sqrt(_square_integrals(stack, energy, coefficients).sum()), peak)
    elif norm == Normalization.MAX_UNIT:
        factor = 1.0 / peak
    else:
        factor = math.copysign(1.0, peak)
    coefficients = tuple((a * factor, b * factor) for a, b in coefficients)

    edges = np.asarray(stack.boundaries[:-1])
    psi, dpsi = _evaluate(stack, energy, coefficients, edges)
    states = tuple(StateVector(psi=float(p), dpsi=float(d)) for p, d in zip(psi, dpsi))

    return PiecewiseWavefunction(
        stack=stack,
        energy=energy,
        coefficients=coefficients,
        layer_states=states,
        normalization=norm,
    )


def evaluate(wf: PiecewiseWavefunction, xs: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """psi and dpsi at arbitrary positions in [0, total_width]."""
    return _evaluate(wf.stack, wf.energy, wf.coefficients, np.atleast_1d(np.asarray(xs, dtype=float)))


def sample(wf: PiecewiseWavefunction, n_samples: Optional[int] = None) -> pd.DataFrame:
    """Uniform samples including both walls, as columns x, psi, dpsi.

    The wall conditions are imposed exactly on the end samples.
    """
    if n_samples is None:
        n_samples = settings.default_samples
    if n_samples < 2:
        raise ValueError(f"n_samples must be >= 2, got {n_samples}")

    xs = np.linspace(0.0, wf.stack.total_width, n_samples)
    psi, dpsi = evaluate(wf, xs)
    for end, bc in ((0, wf.stack.left_bc), (-1, wf.stack.right_bc)):
        if bc == BoundaryCondition.DIRICHLET:
            psi[end] = 0.0
        else:
            dpsi[end] = 0.0
    return pd.DataFrame({"x": xs, "psi": psi, "dpsi": dpsi})


def count_nodes(wf: PiecewiseWavefunction) -> int:
    """Strict interior sign changes of psi on a dense grid."""
    psi, _ = evaluate(wf, _node_grid(wf.stack))
    keep = np.abs(psi) > 1e-12 * np.max(np.abs(psi))
    if wf.stack.left_bc == BoundaryCondition.DIRICHLET:
        keep[0] = False
    if wf.stack.right_bc == BoundaryCondition.DIRICHLET:
        keep[-1] = False
    signs = np.sign(psi[keep])
    return int(np.count_nonzero(signs[:-1] != signs[1:]))


def layer_probabilities(wf: PiecewiseWavefunction) -> List[float]:
    """Fraction of the integral of psi^2 carried by each layer."""
    integrals = _square_integrals(wf.stack, wf.energy, wf.coefficients)
    return [float(v) for v in integrals / integrals.sum()]


def period_amplitude_ratios(wf: PiecewiseWavefunction, layers_per_period: int = 2) -> List[float]:
    """Least-squares ratio of psi over each period to psi over the previous one."""
    layers = wf.stack.layers
    if layers_per_period < 1 or len(layers) % layers_per_period:
        raise StackValidationError(f"{len(layers)} layers do not split into periods of {layers_per_period}")

    starts = np.asarray(wf.stack.boundaries[::layers_per_period])
    periods = np.diff(starts)
    if not np.allclose(periods, periods[0]):
        raise StackValidationError("periods have unequal widths")

    n = max(2, int(math.ceil(settings.node_samples_per_unit * periods[0])))
    offsets = np.linspace(0.0, periods[0], n, endpoint=False)
    segments = [evaluate(wf, start + offsets)[0] for start in starts[:-1]]
    return [float(np.dot(nxt, cur) / np.dot(cur, cur)) for cur, nxt in zip(segments, segments[1:])]


def gap_minimum(wf: PiecewiseWavefunction, n_samples: Optional[int] = None) -> float:
    """Smallest sampled value of psi."""
    return float(sample(wf, n_samples)["psi"].min())
