"""Shared fixtures for the proximity-wells test suite."""

import logging
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))

from projects.proximity_wells.models import BoundaryCondition
from projects.proximity_wells.solvers.stack import make_periodic_bilayer

DIRICHLET = BoundaryCondition.DIRICHLET
NEUMANN = BoundaryCondition.NEUMANN


@pytest.fixture(autouse=True)
def restore_root_logger():
    """CLI runs reconfigure the root logger; put it back after each test."""
    root = logging.getLogger()
    handlers, level = root.handlers[:], root.level
    yield
    root.handlers[:] = handlers
    root.setLevel(level)


@pytest.fixture
def one_period_dirichlet():
    return make_periodic_bilayer(1, 5.0, DIRICHLET)


@pytest.fixture
def one_period_neumann():
    return make_periodic_bilayer(1, 5.0, NEUMANN)


@pytest.fixture
def two_period_dirichlet():
    return make_periodic_bilayer(2, 5.0, DIRICHLET)


@pytest.fixture
def square_well():
    """V = 0: an infinite square well of width 2."""
    return make_periodic_bilayer(1, 0.0, DIRICHLET)
