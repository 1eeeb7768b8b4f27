"""Validated configuration of a single CLI run."""

import json
from enum import Enum
from pathlib import Path
from typing import Any, Dict, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, FiniteFloat, model_validator

from core.settings import settings
from projects.proximity_wells.models import (
    BoundaryCondition,
    EnergyWindow,
    Normalization,
    PotentialStack,
    ValidationScope,
)
from projects.proximity_wells.solvers.stack import make_periodic_bilayer, make_stack, parse_layers


class Command(str, Enum):
    """CLI subcommand."""
    SOLVE = "solve"
    SWEEP = "sweep"
    WAVEFUNCTION = "wavefunction"
    VALIDATE = "validate"


class RunConfig(BaseModel):
    """Everything a run needs, validated before any computation starts."""
    model_config = ConfigDict(frozen=True, extra="forbid")

    command: Command
    periods: Optional[int] = Field(default=None, ge=1)
    potential: Optional[FiniteFloat] = Field(default=None, ge=0)
    bc: BoundaryCondition = BoundaryCondition.DIRICHLET
    right_bc: Optional[BoundaryCondition] = None
    layers: Optional[str] = None

    window_lo: Optional[FiniteFloat] = None
    window_hi: Optional[FiniteFloat] = None
    grid_points: Optional[int] = Field(default=None, ge=2)

    index: int = Field(default=0, ge=0)
    samples: int = Field(default_factory=lambda: settings.default_samples, ge=2)
    normalization: Optional[Normalization] = None

    v_min: FiniteFloat = Field(default_factory=lambda: settings.sweep_v_min, ge=0)
    v_max: FiniteFloat = Field(default_factory=lambda: settings.sweep_v_max, gt=0)
    steps: int = Field(default_factory=lambda: settings.sweep_steps, ge=2)

    output_format: Literal["csv", "json"] = Field(default_factory=lambda: settings.default_output_format)
    output: Optional[str] = None

    @model_validator(mode="after")
    def _consistent(self) -> "RunConfig":
        if self.layers is not None and (self.periods is not None or self.potential is not None):
            raise ValueError("--layers describes the whole stack and cannot be combined with --periods or --v")
        if self.command == Command.SWEEP and not self.v_min < self.v_max:
            raise ValueError(f"--v-min must be below --v-max, got ({self.v_min}, {self.v_max})")
        if self.command in (Command.SOLVE, Command.WAVEFUNCTION):
            if self.layers is None and self.potential is None:
                raise ValueError("--v (or --layers) is required")
            self.energy_window(self.build_stack())
        return self

    def build_stack(self) -> PotentialStack:
        """Stack from ``--layers``, or the periodic bilayer from ``--periods``/``--v``."""
        if self.layers is not None:
            return make_stack(parse_layers(self.layers), self.bc, self.right_bc)
        stack = make_periodic_bilayer(self.periods or 1, self.potential or 0.0, self.bc)
        if self.right_bc is not None:
            stack = make_stack(stack.layers, self.bc, self.right_bc)
        return stack

    def energy_window(self, stack: PotentialStack) -> EnergyWindow:
        """Window from the flags, defaulting to (0, highest layer potential)."""
        lo = 0.0 if self.window_lo is None else self.window_lo
        hi = stack.max_potential if self.window_hi is None else self.window_hi
        return EnergyWindow(lo=lo, hi=hi, grid_points=self.grid_points)

    def validation_scope(self) -> ValidationScope:
        """Reference grid, narrowed by ``--periods``/``--v`` when given."""
        scope = ValidationScope()
        updates = {}
        if self.periods is not None:
            updates["periods"] = (self.periods,)
        if self.potential is not None:
            updates["potentials"] = (self.potential,)
            updates["factorization_potentials"] = (self.potential,)
        return scope.model_copy(update=updates)


def load_config_file(path: str) -> Dict[str, Any]:
    """Run settings from a JSON object keyed by ``RunConfig`` field names.

    The subcommand always comes from the command line, so a ``command`` key is ignored.
    """
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    if not isinstance(data, dict):
        raise ValueError(f"{path}: expected a JSON object of run settings")
    data.pop("command", None)
    return data
