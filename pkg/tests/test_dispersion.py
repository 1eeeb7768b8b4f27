"""Tests for the closed-form eigenvalue equations."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.optimize import brentq

from core.errors import OracleDomainError
from projects.proximity_wells.models import BoundaryCondition, EnergyWindow
from projects.proximity_wells.solvers.dispersion import (
    closed_form_residual,
    dirichlet_above_v,
    factored_full,
    kq_pair,
    one_period_dirichlet_threshold,
    reduced_2p,
    reduced_3p,
    u_dirichlet_1p,
    u_neumann_1p,
)
from projects.proximity_wells.solvers.eigensolve import find_roots

DIRICHLET = BoundaryCondition.DIRICHLET
NEUMANN = BoundaryCondition.NEUMANN


def roots_of(residual, V, lo, hi):
    return [root for root, _ in find_roots(lambda E: residual(E, V), EnergyWindow(lo=lo, hi=hi))]


class TestKQPair:

    def test_values(self):
        pair = kq_pair(1.0, 5.0)
        assert (pair.k, pair.q) == (1.0, 2.0)

    def test_edges_allowed(self):
        assert kq_pair(0.0, 5.0).k == 0.0
        assert kq_pair(5.0, 5.0).q == 0.0

    @pytest.mark.parametrize("E", [-0.1, 5.1])
    def test_outside_domain(self, E):
        with pytest.raises(OracleDomainError):
            kq_pair(E, 5.0)


class TestOnePeriodResiduals:

    def test_dirichlet_formula(self):
        k, q = math.sqrt(2.0), math.sqrt(3.0)
        expected = q * math.sin(k) * math.cosh(q) + k * math.cos(k) * math.sinh(q)
        assert u_dirichlet_1p(2.0, 5.0) == pytest.approx(expected, rel=1e-14)

    def test_neumann_formula(self):
        k, q = math.sqrt(2.0), math.sqrt(3.0)
        expected = q * math.sinh(q) * math.cos(k) - k * math.sin(k) * math.cosh(q)
        assert u_neumann_1p(2.0, 5.0) == pytest.approx(expected, rel=1e-14)

    def test_neumann_allows_zero_energy(self):
        q = math.sqrt(5.0)
        assert u_neumann_1p(0.0, 5.0) == pytest.approx(q * math.sinh(q))

    def test_dirichlet_excludes_zero_energy(self):
        with pytest.raises(OracleDomainError):
            u_dirichlet_1p(0.0, 5.0)

    @pytest.mark.parametrize("residual", [u_dirichlet_1p, u_neumann_1p, reduced_2p, reduced_3p])
    def test_excludes_barrier_top(self, residual):
        with pytest.raises(OracleDomainError):
            residual(5.0, 5.0)

    def test_array_input(self):
        values = u_dirichlet_1p(np.array([1.0, 2.0, 3.0]), 5.0)
        assert isinstance(values, np.ndarray)
        assert values.shape == (3,)
        assert isinstance(u_dirichlet_1p(1.0, 5.0), float)

    def test_array_with_one_bad_energy(self):
        with pytest.raises(OracleDomainError):
            u_neumann_1p(np.array([1.0, 6.0]), 5.0)

    def test_dirichlet_residual_near_reference(self):
        assert abs(u_dirichlet_1p(4.38, 5.0)) < 2e-2

    @pytest.mark.parametrize(
        "residual,V,lo,hi",
        [
            (u_dirichlet_1p, 5.0, 4.37, 4.39),
            (u_neumann_1p, 5.0, 1.11, 1.13),
            (u_neumann_1p, 2.0, 0.69, 0.71),
            (reduced_2p, 5.0, 2.47, 2.49),
            (reduced_2p, 2.0, 1.50, 1.52),
            (reduced_3p, 5.0, 2.21, 2.23),
            (reduced_3p, 2.0, 1.17, 1.19),
        ],
    )
    def test_reference_roots(self, residual, V, lo, hi):
        assert residual(lo, V) * residual(hi, V) < 0
        assert len(roots_of(residual, V, lo, hi)) == 1


class TestProductForm:

    def test_one_period_sign_matches_tangent_form(self):
        E = np.linspace(0.01, 9.99, 2000)
        k, q = np.sqrt(E), np.sqrt(10.0 - E)
        keep = np.abs(np.cos(k)) > 1e-6
        tangent = (q * np.tan(k) + k * np.tanh(q)) * np.sign(np.cos(k))
        product = u_dirichlet_1p(E, 10.0)
        np.testing.assert_array_equal(np.sign(product[keep]), np.sign(tangent[keep]))

    def test_three_period_sign_matches_tangent_form(self):
        E = np.linspace(0.01, 9.99, 2000)
        k, q = np.sqrt(E), np.sqrt(10.0 - E)
        keep = np.abs(np.cos(k)) > 1e-3
        t, th = np.tan(k), np.tanh(q)
        tangent = (
            (k**4 - k**2 * q**2 + q**4) * t**2 * th**2
            + k**2 * q**2 * (3 + th**2 - t**2)
            + 4 * k * q * (q**2 - k**2) * t * th
        )
        np.testing.assert_array_equal(np.sign(reduced_3p(E, 10.0)[keep]), np.sign(tangent[keep]))

    @given(
        V=st.floats(min_value=0.5, max_value=30.0),
        fraction=st.floats(min_value=0.01, max_value=0.99),
    )
    @settings(max_examples=100, deadline=None)
    def test_three_period_is_chebyshev_of_two_period(self, V, fraction):
        E = V * fraction
        two = reduced_2p(E, V)
        expected = two**2 - E * (V - E)
        scale = V**2 * math.cosh(math.sqrt(V - E)) ** 2 + 1.0
        assert abs(reduced_3p(E, V) - expected) <= 1e-12 * scale


class TestFactorization:

    @pytest.mark.parametrize("bc,residual", [(DIRICHLET, u_dirichlet_1p), (NEUMANN, u_neumann_1p)])
    @pytest.mark.parametrize("periods", [2, 3])
    def test_one_period_roots_solve_full_equation(self, bc, residual, periods):
        V = 10.0
        grid = np.linspace(0.01, 9.99, 2000)
        scale = np.max(np.abs(factored_full(grid, V, periods, bc)))
        for _, (lo, hi) in find_roots(lambda E: residual(E, V), EnergyWindow(lo=0.0, hi=V)):
            root = brentq(lambda E: residual(E, V), lo, hi, xtol=1e-15) if lo < hi else lo
            assert abs(factored_full(root, V, periods, bc)) <= 1e-10 * scale

    def test_unsupported_periods(self):
        with pytest.raises(OracleDomainError):
            factored_full(1.0, 5.0, 4, DIRICHLET)

    def test_closed_form_dispatch(self):
        assert closed_form_residual(1.0, 5.0, 1, NEUMANN) == u_neumann_1p(1.0, 5.0)
        assert closed_form_residual(1.0, 5.0, 2, DIRICHLET) == pytest.approx(
            reduced_2p(1.0, 5.0) * u_dirichlet_1p(1.0, 5.0)
        )


class TestAboveBarrier:

    def test_square_well_limit(self):
        roots = roots_of(dirichlet_above_v, 0.0, 0.0, 5.0)
        assert roots == pytest.approx([math.pi**2 / 4], abs=1e-8)

    def test_small_barrier(self):
        assert abs(dirichlet_above_v(2.47, 0.001)) < 1e-2

    def test_requires_energy_above_barrier(self):
        with pytest.raises(OracleDomainError):
            dirichlet_above_v(np.array([3.0, 5.0]), 5.0)

    def test_continues_the_dirichlet_branch_below_threshold(self):
        V = 4.10
        assert roots_of(u_dirichlet_1p, V, 0.0, V) == []
        above = roots_of(dirichlet_above_v, V, V, V + math.pi**2 / 4 + 1.0)
        assert above and 0.0 < above[0] - V < 0.05


class TestThreshold:

    def test_tangent_limit(self):
        V = one_period_dirichlet_threshold()
        x = math.sqrt(V)
        assert math.tan(x) == pytest.approx(-x, rel=1e-10)
        assert V == pytest.approx(4.115858, abs=1e-5)

    def test_matches_reference_value(self):
        assert abs(one_period_dirichlet_threshold() - 4.12) <= 0.02

    @pytest.mark.parametrize("V,binds", [(4.10, False), (4.14, True)])
    def test_binding_either_side(self, V, binds):
        assert bool(roots_of(u_dirichlet_1p, V, 0.0, V)) is binds
