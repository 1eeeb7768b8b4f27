"""Pydantic models for potential stacks, propagation and eigensolutions.

All energies and potentials are dimensionless, in units of hbar^2/(2 m d^2); all lengths
are in units of the single-layer width d.
"""

import math
from enum import Enum
from itertools import accumulate
from typing import List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, FiniteFloat, model_validator


class BoundaryCondition(str, Enum):
    """End condition at an outer wall of the stack."""
    DIRICHLET = "dirichlet"
    NEUMANN = "neumann"


class Normalization(str, Enum):
    """Normalization applied to an eigenfunction."""
    L2_UNIT = "l2"
    MAX_UNIT = "max"
    RAW = "raw"


class BranchLabel(str, Enum):
    """Eigenvalue branch reported in energy-vs-potential sweeps."""
    ONE_PERIOD_DIRICHLET = "dirichlet_1p"
    ONE_PERIOD_NEUMANN = "neumann_1p"
    REDUCED_MULTI_PERIOD_2 = "reduced_2p"
    REDUCED_MULTI_PERIOD_3 = "reduced_3p"
    DIRICHLET_ABOVE_V = "dirichlet_above_v"


class MismatchSign(int, Enum):
    """Sign of the boundary mismatch at a trial energy."""
    NEGATIVE = -1
    ZERO = 0
    POSITIVE = 1


class Layer(BaseModel):
    """A constant-potential layer."""
    model_config = ConfigDict(frozen=True)

    potential: FiniteFloat = Field(description="Layer potential")
    width: FiniteFloat = Field(gt=0, description="Layer width")


class PotentialStack(BaseModel):
    """Ordered layers between two walls; the whole problem instance."""
    model_config = ConfigDict(frozen=True)

    layers: Tuple[Layer, ...] = Field(min_length=1, description="Layers from x = 0 rightwards")
    left_bc: BoundaryCondition = Field(description="Condition at x = 0")
    right_bc: BoundaryCondition = Field(description="Condition at x = total_width")

    @property
    def total_width(self) -> float:
        return self.boundaries[-1]

    @property
    def boundaries(self) -> Tuple[float, ...]:
        """Layer edges, starting at 0 and ending at the total width."""
        return (0.0, *accumulate(layer.width for layer in self.layers))

    @property
    def max_potential(self) -> float:
        return max(layer.potential for layer in self.layers)

    @property
    def potentials(self) -> np.ndarray:
        return np.array([layer.potential for layer in self.layers])


class StateVector(BaseModel):
    """The pair (psi, dpsi/dx) at a point.

    A nonzero initial vector stays nonzero under the unimodular layer maps.
    """
    model_config = ConfigDict(frozen=True)

    psi: float
    dpsi: float


class LayerPropagator(BaseModel):
    """2x2 map carrying (psi, dpsi) from a layer's left edge to its right edge."""
    model_config = ConfigDict(frozen=True)

    m11: float
    m12: float
    m21: float
    m22: float

    @property
    def determinant(self) -> float:
        return self.m11 * self.m22 - self.m12 * self.m21

    def as_array(self) -> np.ndarray:
        return np.array([[self.m11, self.m12], [self.m21, self.m22]])

    def apply(self, state: StateVector) -> StateVector:
        return StateVector(
            psi=self.m11 * state.psi + self.m12 * state.dpsi,
            dpsi=self.m21 * state.psi + self.m22 * state.dpsi,
        )


class MismatchResult(BaseModel):
    """Boundary residual after propagation; the true residual is value * exp(scale_log)."""
    model_config = ConfigDict(frozen=True)

    value: float = Field(description="Rescaled signed residual")
    scale_log: float = Field(description="Accumulated natural-log rescaling")

    @property
    def sign(self) -> MismatchSign:
        return MismatchSign(int(np.sign(self.value)))


class KQPair(BaseModel):
    """Wavenumber in the well and decay constant in the barrier, for 0 <= E <= V."""
    model_config = ConfigDict(frozen=True)

    k: float = Field(ge=0)
    q: float = Field(ge=0)

    @classmethod
    def from_energy(cls, energy: float, potential: float) -> "KQPair":
        return cls(k=math.sqrt(energy), q=math.sqrt(potential - energy))


class EnergyWindow(BaseModel):
    """Energy interval to scan; grid_points defaults to a density-based value."""
    model_config = ConfigDict(frozen=True)

    lo: FiniteFloat
    hi: FiniteFloat
    grid_points: Optional[int] = Field(default=None, ge=2)

    @model_validator(mode="after")
    def _ordered(self) -> "EnergyWindow":
        if not self.lo < self.hi:
            raise ValueError(f"window requires lo < hi, got ({self.lo}, {self.hi})")
        return self

    @property
    def width(self) -> float:
        return self.hi - self.lo


class Eigenvalue(BaseModel):
    """A refined eigenvalue with its classification."""
    model_config = ConfigDict(frozen=True)

    energy: float
    bracket: Tuple[float, float]
    node_count: int = Field(ge=0)
    proximity_valid: bool
    below_barrier: bool

    @model_validator(mode="after")
    def _consistent(self) -> "Eigenvalue":
        if self.proximity_valid != (self.node_count == 0):
            raise ValueError("proximity_valid must equal (node_count == 0)")
        return self


class PiecewiseWavefunction(BaseModel):
    """Eigenfunction of a stack, two basis coefficients per layer."""
    model_config = ConfigDict(frozen=True)

    stack: PotentialStack
    energy: float
    coefficients: Tuple[Tuple[float, float], ...]
    layer_states: Tuple[StateVector, ...] = Field(description="(psi, dpsi) at each layer's left edge")
    normalization: Normalization

    @model_validator(mode="after")
    def _one_entry_per_layer(self) -> "PiecewiseWavefunction":
        n = len(self.stack.layers)
        if len(self.coefficients) != n or len(self.layer_states) != n:
            raise ValueError("wavefunction needs coefficients and a state for every layer")
        return self


class SweepRow(BaseModel):
    """One (V, E, branch) point of an energy-vs-potential curve."""
    model_config = ConfigDict(frozen=True)

    potential: float
    energy: float
    branch: BranchLabel


class SweepTable(BaseModel):
    """Sweep rows ordered by potential, then by branch order."""
    rows: List[SweepRow] = Field(default_factory=list)

    def energies(self, branch: BranchLabel) -> List[Tuple[float, float]]:
        return [(row.potential, row.energy) for row in self.rows if row.branch == branch]


class ValidationScope(BaseModel):
    """Configurations covered by a validation run."""
    model_config = ConfigDict(frozen=True)

    periods: Tuple[int, ...] = Field(default=(1, 2, 3), min_length=1)
    potentials: Tuple[float, ...] = Field(default=(2.0, 5.0, 10.0), min_length=1)
    factorization_potentials: Tuple[float, ...] = Field(default=(4.5, 5.0, 10.0, 20.0), min_length=1)
    seed: int = 20240


class CheckFailure(BaseModel):
    """One offending configuration of a validation check."""
    periods: Optional[int] = None
    bc: Optional[BoundaryCondition] = None
    potential: Optional[float] = None
    energy: Optional[float] = None
    message: str


class CheckOutcome(BaseModel):
    """Result of one registered validation check."""
    check_id: str
    name: str
    passed: bool
    failures: List[CheckFailure] = Field(default_factory=list)


class ValidationReport(BaseModel):
    """All check outcomes of a validation run."""
    outcomes: List[CheckOutcome] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(outcome.passed for outcome in self.outcomes)
