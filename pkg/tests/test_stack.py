"""Tests for stack builders and position lookup."""

import numpy as np
import pytest
from pydantic import ValidationError

from core.errors import StackValidationError
from projects.proximity_wells.models import BoundaryCondition, Layer, PotentialStack
from projects.proximity_wells.solvers.stack import (
    layer_at,
    layer_indices,
    make_periodic_bilayer,
    make_stack,
    parse_layers,
)

DIRICHLET = BoundaryCondition.DIRICHLET
NEUMANN = BoundaryCondition.NEUMANN


class TestPeriodicBilayer:

    def test_one_period(self):
        stack = make_periodic_bilayer(1, 5.0, DIRICHLET)
        assert [(layer.potential, layer.width) for layer in stack.layers] == [(0.0, 1.0), (5.0, 1.0)]
        assert stack.left_bc == stack.right_bc == DIRICHLET

    def test_two_periods(self):
        stack = make_periodic_bilayer(2, 5.0, NEUMANN)
        assert [layer.potential for layer in stack.layers] == [0.0, 5.0, 0.0, 5.0]
        assert stack.total_width == 4.0
        assert stack.left_bc == stack.right_bc == NEUMANN

    def test_zero_barrier_is_a_single_well(self):
        stack = make_periodic_bilayer(1, 0.0, DIRICHLET)
        assert stack.max_potential == 0.0
        assert stack.total_width == 2.0

    @pytest.mark.parametrize("periods", [1, 2, 3, 4, 7])
    def test_width_and_alternation(self, periods):
        stack = make_periodic_bilayer(periods, 3.5, DIRICHLET)
        assert stack.total_width == 2 * periods
        assert stack.boundaries == tuple(float(i) for i in range(2 * periods + 1))
        for j, layer in enumerate(stack.layers):
            assert layer.potential == (0.0 if j % 2 == 0 else 3.5)

    def test_rejects_zero_periods(self):
        with pytest.raises(StackValidationError):
            make_periodic_bilayer(0, 5.0, DIRICHLET)

    def test_rejects_negative_barrier(self):
        with pytest.raises(StackValidationError):
            make_periodic_bilayer(1, -1.0, DIRICHLET)


class TestMakeStack:

    def test_tuples_and_default_right_bc(self):
        stack = make_stack([(0.0, 0.5), (2.0, 1.5), (1.0, 1.0)], NEUMANN)
        assert stack.right_bc == NEUMANN
        assert stack.boundaries == (0.0, 0.5, 2.0, 3.0)
        np.testing.assert_array_equal(stack.potentials, [0.0, 2.0, 1.0])

    def test_mixed_end_conditions(self):
        stack = make_stack([Layer(potential=0.0, width=1.0)], DIRICHLET, NEUMANN)
        assert (stack.left_bc, stack.right_bc) == (DIRICHLET, NEUMANN)

    @pytest.mark.parametrize("layers", [[], [(0.0, 0.0)], [(0.0, -1.0)], [(float("inf"), 1.0)]])
    def test_rejects_invalid_layers(self, layers):
        with pytest.raises(StackValidationError):
            make_stack(layers, DIRICHLET)

    def test_stack_is_immutable(self, one_period_dirichlet):
        with pytest.raises(ValidationError):
            one_period_dirichlet.left_bc = NEUMANN

    def test_model_requires_a_layer(self):
        with pytest.raises(ValidationError):
            PotentialStack(layers=(), left_bc=DIRICHLET, right_bc=DIRICHLET)


class TestParseLayers:

    def test_pairs(self):
        layers = parse_layers("0:1, 5:1.5,")
        assert [(layer.potential, layer.width) for layer in layers] == [(0.0, 1.0), (5.0, 1.5)]

    @pytest.mark.parametrize("text", ["", "0-1", "0:1:2", "a:1", "0:0"])
    def test_rejects_malformed(self, text):
        with pytest.raises(StackValidationError):
            parse_layers(text)


class TestLayerAt:

    def test_interior_point(self, one_period_dirichlet):
        assert layer_at(one_period_dirichlet, 0.5) == (0, 0.5)

    def test_boundary_goes_right(self, one_period_dirichlet):
        assert layer_at(one_period_dirichlet, 1.0) == (1, 0.0)

    def test_right_end_belongs_to_last_layer(self, two_period_dirichlet):
        assert layer_at(two_period_dirichlet, 4.0) == (3, 1.0)

    def test_left_end(self, one_period_dirichlet):
        assert layer_at(one_period_dirichlet, 0.0) == (0, 0.0)

    @pytest.mark.parametrize("x", [-1e-9, 2.0 + 1e-9, 10.0])
    def test_rejects_outside(self, one_period_dirichlet, x):
        with pytest.raises(StackValidationError):
            layer_at(one_period_dirichlet, x)

    def test_vectorized_lookup(self):
        stack = make_stack([(0.0, 0.5), (1.0, 0.25), (2.0, 1.0)], DIRICHLET)
        idx, offset = layer_indices(stack, np.array([0.0, 0.5, 0.6, 0.75, 1.75]))
        np.testing.assert_array_equal(idx, [0, 1, 1, 2, 2])
        np.testing.assert_allclose(offset, [0.0, 0.0, 0.1, 0.0, 1.0])
