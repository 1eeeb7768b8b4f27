"""Potential stack builders and position lookup."""

from typing import Iterable, Optional, Tuple, Union

import numpy as np
from pydantic import ValidationError

from core.errors import StackValidationError
from projects.proximity_wells.models import BoundaryCondition, Layer, PotentialStack


def make_periodic_bilayer(periods: int, V: float, bc: BoundaryCondition) -> PotentialStack:
    """Build an N-period stack of equal-width layers alternating potential 0 and V.

    Args:
        periods: Number of (well, barrier) periods, at least 1
        V: Barrier potential, non-negative (the well potential is fixed at 0)
        bc: Condition applied at both walls

    Returns:
        Stack of 2 * periods unit-width layers
    """
    if periods < 1:
        raise StackValidationError(f"periods must be >= 1, got {periods}")
    if V < 0:
        raise StackValidationError(f"barrier potential must be >= 0, got {V}")

    layers = [(0.0, 1.0), (float(V), 1.0)] * periods
    return make_stack(layers, bc, bc)


def make_stack(
    layers: Iterable[Union[Layer, Tuple[float, float]]],
    left_bc: BoundaryCondition,
    right_bc: Optional[BoundaryCondition] = None,
) -> PotentialStack:
    """Build a stack from layers or (potential, width) pairs.

    Args:
        layers: Layers from x = 0 rightwards
        left_bc: Condition at x = 0
        right_bc: Condition at the right wall (defaults to left_bc)
    """
    try:
        built = tuple(
            layer if isinstance(layer, Layer) else Layer(potential=layer[0], width=layer[1])
            for layer in layers
        )
        return PotentialStack(layers=built, left_bc=left_bc, right_bc=right_bc or left_bc)
    except ValidationError as e:
        raise StackValidationError(str(e)) from e


def parse_layers(text: str) -> list[Layer]:
    """Parse comma-separated ``potential:width`` pairs, e.g. ``"0:1,5:1"``."""
    layers = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            potential, width = chunk.split(":")
            layers.append(Layer(potential=float(potential), width=float(width)))
        except (ValueError, ValidationError) as e:
            raise StackValidationError(f"invalid layer '{chunk}': expected potential:width") from e
    if not layers:
        raise StackValidationError("layer specification is empty")
    return layers


def layer_indices(stack: PotentialStack, xs: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Vectorized layer lookup; interior boundaries belong to the layer on the right.

    Args:
        stack: Potential stack
        xs: Positions within [0, total_width]

    Returns:
        (layer index array, offset-from-left-edge array)
    """
    xs = np.asarray(xs, dtype=float)
    edges = np.asarray(stack.boundaries)
    if np.any(xs < 0.0) or np.any(xs > edges[-1]):
        raise StackValidationError(f"positions must lie in [0, {edges[-1]}]")

    idx = np.searchsorted(edges, xs, side="right") - 1
    idx = np.clip(idx, 0, len(stack.layers) - 1)
    return idx, xs - edges[idx]


def layer_at(stack: PotentialStack, x: float) -> Tuple[int, float]:
    """Index of the layer containing x and the offset from that layer's left edge."""
    idx, offset = layer_indices(stack, np.array([x]))
    return int(idx[0]), float(offset[0])
