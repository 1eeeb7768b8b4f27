"""Exception hierarchy for the proximity-wells solvers."""

from typing import List, Tuple


class ProximityWellsError(Exception):
    """Base class for all solver errors."""


class StackValidationError(ProximityWellsError, ValueError):
    """A potential stack or a position inside it is invalid."""


class OracleDomainError(ProximityWellsError, ValueError):
    """A closed-form residual was evaluated outside its energy domain."""


class BisectionError(ProximityWellsError, RuntimeError):
    """One or more brackets did not converge within the iteration cap."""

    def __init__(self, message: str, brackets: List[Tuple[float, float]]):
        super().__init__(message)
        self.brackets = brackets


class NotAnEigenvalueError(ProximityWellsError, ValueError):
    """The requested energy does not satisfy the boundary conditions of the stack."""


class EigenstateNotFoundError(ProximityWellsError, LookupError):
    """The requested eigenstate index does not exist in the energy window."""
