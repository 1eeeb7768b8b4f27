"""Transfer-matrix propagation of (psi, dpsi) across a stack and the boundary mismatch.

In a layer of potential V_j and width w, with u = E - V_j:
    u > 0:  [[cos(kw), sin(kw)/k], [-k sin(kw), cos(kw)]],   k = sqrt(u)
    u < 0:  [[cosh(qw), sinh(qw)/q], [q sinh(qw), cosh(qw)]], q = sqrt(-u)
    u = 0:  [[1, w], [0, 1]]

Scans evaluate many energies at once, so the propagation below works on numpy arrays of
energies. Hyperbolic layers are applied in scaled form (entries times exp(-qw)) and the
state is renormalized to unit max-norm after every layer; only the log of the discarded
scale is kept, so barriers of any height stay finite.

The mismatch is evaluated by shooting from both walls to a matching interface in the middle
of the stack. The right-wall state is chosen so that the Wronskian of the two solutions
equals psi (Dirichlet) or dpsi (Neumann) of the left solution at the right wall, i.e. the
left-to-right residual itself. The left solution crosses the first half of the layers and
the right solution crosses the rest.
"""

import math
from typing import Sequence, Tuple

import numpy as np

from core.settings import settings
from projects.proximity_wells.models import (
    BoundaryCondition,
    Layer,
    LayerPropagator,
    MismatchResult,
    MismatchSign,
    PotentialStack,
)


def degenerate_tolerance(potential: float) -> float:
    """|E - V_j| below this is treated as the linear (u = 0) case."""
    return settings.degenerate_energy_tol * max(1.0, abs(potential))


def layer_propagator(layer: Layer, E: float) -> LayerPropagator:
    """Unscaled propagation matrix of one layer at energy E."""
    w = layer.width
    u = E - layer.potential

    if abs(u) < degenerate_tolerance(layer.potential):
        return LayerPropagator(m11=1.0, m12=w, m21=0.0, m22=1.0)

    if u > 0:
        k = math.sqrt(u)
        c, s = math.cos(k * w), math.sin(k * w)
        return LayerPropagator(m11=c, m12=s / k, m21=-k * s, m22=c)

    q = math.sqrt(-u)
    ch, sh = math.cosh(q * w), math.sinh(q * w)
    return LayerPropagator(m11=ch, m12=sh / q, m21=q * sh, m22=ch)


def scaled_layer_entries(
    layer: Layer, energies: np.ndarray
) -> Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Vectorized layer matrices, with hyperbolic entries scaled by exp(-qw).

    Returns:
        (m11, m12, m21, m22, log_scale) where the true matrix is exp(log_scale) * m
    """
    w = layer.width
    u = np.asarray(energies, dtype=float) - layer.potential
    tol = degenerate_tolerance(layer.potential)
    osc = u > tol
    hyp = u < -tol

    kw = np.sqrt(np.where(osc, u, 0.0)) * w
    qw = np.sqrt(np.where(hyp, -u, 0.0)) * w

    # oscillatory: sin(kw)/k written as w * sinc so k -> 0 stays finite
    cos_kw = np.cos(kw)
    sin_over_k = w * np.sinc(kw / np.pi)
    k_sin = np.where(osc, np.sqrt(np.where(osc, u, 0.0)) * np.sin(kw), 0.0)

    # hyperbolic, scaled by exp(-qw)
    tail = -np.expm1(-2.0 * qw)
    ch = 0.5 * (2.0 - tail)
    sh = 0.5 * tail
    safe_qw = np.where(qw > 0, qw, 1.0)
    sh_over_q = np.where(qw > 0, w * sh / safe_qw, w)
    q_sh = np.sqrt(np.where(hyp, -u, 0.0)) * sh

    m11 = np.where(osc, cos_kw, np.where(hyp, ch, 1.0))
    m12 = np.where(osc, sin_over_k, np.where(hyp, sh_over_q, w))
    m21 = np.where(osc, -k_sin, np.where(hyp, q_sh, 0.0))
    m22 = m11
    log_scale = np.where(hyp, qw, 0.0)
    return m11, m12, m21, m22, log_scale


def initial_state(bc: BoundaryCondition) -> Tuple[float, float]:
    """Left-wall state: Dirichlet pins psi, Neumann pins dpsi."""
    return (0.0, 1.0) if bc == BoundaryCondition.DIRICHLET else (1.0, 0.0)


def final_state(bc: BoundaryCondition) -> Tuple[float, float]:
    """Right-wall state whose Wronskian with the left solution is the wall residual."""
    return (0.0, 1.0) if bc == BoundaryCondition.DIRICHLET else (-1.0, 0.0)


def _carry(
    layers: Sequence[Layer],
    energies: np.ndarray,
    start: Tuple[float, float],
    backward: bool = False,
) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    psi = np.full_like(energies, start[0])
    dpsi = np.full_like(energies, start[1])
    scale_log = np.zeros_like(energies)

    for layer in reversed(layers) if backward else layers:
        m11, m12, m21, m22, log_scale = scaled_layer_entries(layer, energies)
        if backward:
            # unit determinant: the inverse is the adjugate
            m11, m12, m21, m22 = m22, -m12, -m21, m11
        psi, dpsi = m11 * psi + m12 * dpsi, m21 * psi + m22 * dpsi
        norm = np.maximum(np.abs(psi), np.abs(dpsi))
        psi = psi / norm
        dpsi = dpsi / norm
        scale_log = scale_log + log_scale + np.log(norm)

    return psi, dpsi, scale_log


def propagate(stack: PotentialStack, energies: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Carry the left-wall state through every layer for an array of energies.

    Returns:
        (psi, dpsi, scale_log) at the right wall; (psi, dpsi) has unit max-norm
    """
    energies = np.atleast_1d(np.asarray(energies, dtype=float))
    return _carry(stack.layers, energies, initial_state(stack.left_bc))


def matching_index(stack: PotentialStack) -> int:
    """Number of layers crossed from the left before meeting the right-wall solution."""
    return len(stack.layers) // 2


def _matched(stack: PotentialStack, energies: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    energies = np.atleast_1d(np.asarray(energies, dtype=float))
    m = matching_index(stack)
    psi_l, dpsi_l, log_l = _carry(stack.layers[:m], energies, initial_state(stack.left_bc))
    psi_r, dpsi_r, log_r = _carry(stack.layers[m:], energies, final_state(stack.right_bc), backward=True)
    return psi_l * dpsi_r - dpsi_l * psi_r, log_l + log_r


def mismatch_values(stack: PotentialStack, energies: np.ndarray) -> np.ndarray:
    """Rescaled right-wall residual for each energy; zeros are the eigenvalues."""
    value, _ = _matched(stack, energies)
    return value


def mismatch(stack: PotentialStack, E: float) -> MismatchResult:
    """Boundary mismatch at a single trial energy.

    ``value * exp(scale_log)`` is psi (right Dirichlet wall) or dpsi (right Neumann wall)
    of the solution started at the left wall.
    """
    value, scale_log = _matched(stack, np.array([E]))
    return MismatchResult(value=float(value[0]), scale_log=float(scale_log[0]))


def mismatch_sign_profile(stack: PotentialStack, energies: Sequence[float]) -> list[MismatchSign]:
    """Sign of the mismatch at each of a strictly increasing list of energies."""
    if len(energies) == 0:
        return []
    grid = np.asarray(energies, dtype=float)
    if np.any(np.diff(grid) <= 0):
        raise ValueError("energies must be strictly increasing")

    signs = np.sign(mismatch_values(stack, grid)).astype(int)
    return [MismatchSign(int(s)) for s in signs]
