"""Reference bilayer configurations and their eigenvalues to two decimals."""

import math
from typing import Tuple

from pydantic import BaseModel, ConfigDict

from projects.proximity_wells.models import BoundaryCondition

DIRICHLET = BoundaryCondition.DIRICHLET
NEUMANN = BoundaryCondition.NEUMANN


class ReferenceCase(BaseModel):
    """A periodic bilayer with eigenvalues known to two decimals."""
    model_config = ConfigDict(frozen=True)

    periods: int
    potential: float
    bc: BoundaryCondition
    expected: Tuple[float, ...]
    exact_set: bool = False
    description: str = ""


# Reference values carry two decimals
REFERENCE_TOLERANCE = 0.01

REFERENCE_CASES = (
    ReferenceCase(periods=1, potential=5.0, bc=DIRICHLET, expected=(4.38,), exact_set=True,
                  description="one period, bulk of probability in the well"),
    ReferenceCase(periods=1, potential=5.0, bc=NEUMANN, expected=(1.12,), exact_set=True,
                  description="one period, standard proximity decay"),
    ReferenceCase(periods=1, potential=2.0, bc=NEUMANN, expected=(0.70,), exact_set=True,
                  description="one period, low barrier"),
    ReferenceCase(periods=2, potential=5.0, bc=DIRICHLET, expected=(2.48, 4.38), exact_set=True,
                  description="two periods, bulk in the third layer"),
    ReferenceCase(periods=2, potential=2.0, bc=NEUMANN, expected=(0.70, 1.51), exact_set=True,
                  description="two periods, upper state has a node"),
    ReferenceCase(periods=3, potential=5.0, bc=DIRICHLET, expected=(2.22, 4.38),
                  description="three periods, bulk in the second and third wells"),
    ReferenceCase(periods=3, potential=2.0, bc=NEUMANN, expected=(0.70, 1.18),
                  description="three periods, one-period state unchanged"),
)

# Lowest one-period Dirichlet state crosses E = V here
DIRICHLET_THRESHOLD = 4.12
DIRICHLET_THRESHOLD_TOLERANCE = 0.02

SQUARE_WELL_GROUND = math.pi**2 / 4
INFINITE_BARRIER_GROUND = math.pi**2
INFINITE_BARRIER_POTENTIAL = 1e6

ROOT_AGREEMENT_TOL = 1e-8
FACTORIZATION_TOL = 1e-10
