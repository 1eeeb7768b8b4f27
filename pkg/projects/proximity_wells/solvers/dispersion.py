"""Closed-form eigenvalue equations for one-, two- and three-period bilayers.

Every residual takes (E, V) with unit layer width and returns a signed value whose zeros are
eigenvalues. Each is the tan/tanh form multiplied through by cos(k) cosh(q) (squared for
the three-period equation), which keeps the residual finite where tan(k) has poles:

    one period, Dirichlet:  q tan k + k tanh q = 0
    one period, Neumann:    k tan k = q tanh q
    reduced, two periods:   2kq + (q^2 - k^2) tan k tanh q = 0
    reduced, three periods: (k^4 - k^2 q^2 + q^4) tan^2 k tanh^2 q
                            + k^2 q^2 (3 + tanh^2 q - tan^2 k)
                            + 4kq (q^2 - k^2) tan k tanh q = 0
    above the barrier:      q~ sin k cos q~ + k cos k sin q~ = 0,  q~ = sqrt(E - V)

k = sqrt(E) and q = sqrt(V - E). Inputs may be floats or numpy arrays.
"""

import math
from typing import Tuple, Union

import numpy as np
from scipy.optimize import brentq

from core.errors import OracleDomainError
from projects.proximity_wells.models import BoundaryCondition, KQPair

ArrayOrFloat = Union[float, np.ndarray]


def kq_pair(E: float, V: float) -> KQPair:
    """Wavenumber and decay constant for 0 <= E <= V."""
    if not 0.0 <= E <= V:
        raise OracleDomainError(f"k, q need 0 <= E <= V, got E={E}, V={V}")
    return KQPair.from_energy(E, V)


def _below_barrier(E: ArrayOrFloat, V: float, allow_zero: bool = False) -> Tuple[np.ndarray, np.ndarray]:
    E = np.asarray(E, dtype=float)
    lower_ok = E >= 0.0 if allow_zero else E > 0.0
    if not np.all(lower_ok & (E < V)) and not (allow_zero and np.all(E == 0.0)):
        raise OracleDomainError(f"residual defined for {'0 <=' if allow_zero else '0 <'} E < V={V}")
    return np.sqrt(E), np.sqrt(V - E)


def _result(value: np.ndarray) -> ArrayOrFloat:
    return float(value) if np.ndim(value) == 0 else value


def u_dirichlet_1p(E: ArrayOrFloat, V: float) -> ArrayOrFloat:
    """One-period Dirichlet residual q sin k cosh q + k cos k sinh q."""
    k, q = _below_barrier(E, V)
    return _result(q * np.sin(k) * np.cosh(q) + k * np.cos(k) * np.sinh(q))


def u_neumann_1p(E: ArrayOrFloat, V: float) -> ArrayOrFloat:
    """One-period Neumann residual q sinh q cos k - k sin k cosh q (E = 0 allowed)."""
    k, q = _below_barrier(E, V, allow_zero=True)
    return _result(q * np.sinh(q) * np.cos(k) - k * np.sin(k) * np.cosh(q))


def reduced_2p(E: ArrayOrFloat, V: float) -> ArrayOrFloat:
    """Two-period equation with the one-period factor removed; shared by both walls."""
    k, q = _below_barrier(E, V)
    return _result(2 * k * q * np.cos(k) * np.cosh(q) + (q**2 - k**2) * np.sin(k) * np.sinh(q))


def reduced_3p(E: ArrayOrFloat, V: float) -> ArrayOrFloat:
    """Three-period equation with the one-period factor removed."""
    k, q = _below_barrier(E, V)
    s, c = np.sin(k), np.cos(k)
    sh, ch = np.sinh(q), np.cosh(q)
    kq = k * q
    value = (
        (k**4 - k**2 * q**2 + q**4) * s**2 * sh**2
        + kq**2 * (3 * c**2 * ch**2 + c**2 * sh**2 - s**2 * ch**2)
        + 4 * kq * (q**2 - k**2) * s * c * sh * ch
    )
    return _result(value)


def dirichlet_above_v(E: ArrayOrFloat, V: float) -> ArrayOrFloat:
    """One-period Dirichlet residual for E > V, oscillatory in both layers."""
    E = np.asarray(E, dtype=float)
    if V < 0 or not np.all(E > V):
        raise OracleDomainError(f"above-barrier residual needs E > V >= 0, got V={V}")
    k, qt = np.sqrt(E), np.sqrt(E - V)
    return _result(qt * np.sin(k) * np.cos(qt) + k * np.cos(k) * np.sin(qt))


_REDUCED = {2: reduced_2p, 3: reduced_3p}
_ONE_PERIOD = {BoundaryCondition.DIRICHLET: u_dirichlet_1p, BoundaryCondition.NEUMANN: u_neumann_1p}


def factored_full(E: ArrayOrFloat, V: float, periods: int, bc: BoundaryCondition) -> ArrayOrFloat:
    """Full two- or three-period equation: reduced factor times the one-period factor."""
    if periods not in _REDUCED:
        raise OracleDomainError(f"closed forms exist for 2 or 3 periods, got {periods}")
    return _result(np.asarray(_REDUCED[periods](E, V)) * np.asarray(_ONE_PERIOD[bc](E, V)))


def closed_form_residual(E: ArrayOrFloat, V: float, periods: int, bc: BoundaryCondition) -> ArrayOrFloat:
    """Closed-form equation for an N-period stack with matching walls, N in {1, 2, 3}."""
    if periods == 1:
        return _ONE_PERIOD[bc](E, V)
    return factored_full(E, V, periods, bc)


def one_period_dirichlet_threshold() -> float:
    """Smallest V at which a one-period Dirichlet stack binds below V.

    As E -> V (q -> 0) the one-period Dirichlet equation reduces to tan(k) = -k with
    k = sqrt(V); the lowest positive root lies in (pi/2, pi).
    """
    x = brentq(lambda k: math.sin(k) + k * math.cos(k), math.pi / 2, math.pi, xtol=1e-15)
    return x * x
