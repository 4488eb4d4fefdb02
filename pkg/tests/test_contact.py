#!/usr/bin/env python3
"""
Tests for superfunctions, vector fields and the contact correspondence f -> D_f.
"""

import pytest

from src.core.contact.field_families import S2_LABELS, W2, codimension_element, s2_basis
from src.core.contact.superfunction import SuperFunction, contact_bracket, odd_poisson_bracket
from src.core.contact.vector_field import (
    VectorField,
    apply,
    contact_field,
    divergence,
    field_symbol,
    s_alpha_member,
    vf_bracket,
)
from src.core.errors import MixedParity
from src.core.suites.field_suites import contact_grid, contact_outcome, witt_field


def function(t: int = 0, mask: int = 0, coefficient=1) -> SuperFunction:
    return SuperFunction.monomial(coefficient, t, mask, W2)


ONE = function()
T = function(1)
X1 = function(mask=0b01)
Y1 = function(mask=0b10)


@pytest.mark.unit
class TestSuperFunction:
    """Products, derivatives and the operators Δ and E."""

    def test_odd_generators_anticommute(self):
        assert Y1 * X1 == -(X1 * Y1)
        assert (X1 * X1).is_zero()

    def test_left_odd_derivative(self):
        x1y1 = X1 * Y1
        assert x1y1.d_odd(0) == Y1
        assert x1y1.d_odd(1) == -X1

    def test_delta(self):
        assert ONE.delta() == function(coefficient=2)
        assert X1.delta() == X1
        assert (X1 * Y1).delta().is_zero()

    def test_shift(self):
        assert T.shift_t(-1) == ONE

    def test_odd_poisson_bracket(self):
        assert odd_poisson_bracket(X1, Y1) == ONE

    def test_printing(self):
        assert str(function(2, 0b11, 3)) == "3 t^2 x1 y1"

    def test_mixed_parity(self):
        with pytest.raises(MixedParity):
            (ONE + X1).parity_bit()


@pytest.mark.unit
class TestVectorField:
    """Superderivations and their bracket."""

    def test_apply_derivation(self):
        d_t = VectorField.d_t(T)
        assert apply(d_t, function(3)) == function(3, coefficient=3)

    @pytest.mark.parametrize("n", [-2, 0, 1])
    @pytest.mark.parametrize("m", [-1, 2])
    def test_witt_fields(self, n, m):
        assert vf_bracket(witt_field(n), witt_field(m)) == witt_field(n + m).scale(n - m)

    def test_symbol_of_witt_field(self):
        symbol = field_symbol(witt_field(1))
        assert str(symbol) == "-t^2 tau"

    def test_divergence_of_euler_type_field(self):
        field = VectorField({(0, 2, 0): 1}, W2)
        assert divergence(field) == function(1, coefficient=2)

    def test_printing(self):
        assert str(witt_field(0)) == "-t dt"


@pytest.mark.unit
class TestDivergenceFree:
    """S'(2, 0) lies in S(2, 0); the codimension element lies in S(2, alpha)."""

    @pytest.mark.parametrize("label", S2_LABELS)
    @pytest.mark.parametrize("n", [-2, -1, 0, 1, 2])
    def test_basis_is_divergence_free(self, label, n):
        assert s_alpha_member(s2_basis(label, n), 0)

    def test_witt_field_needs_alpha(self):
        assert not s_alpha_member(witt_field(1), 0)

    def test_codimension_element(self, alpha):
        element = codimension_element()
        assert str(element) == "x1 y1 dt"
        assert s_alpha_member(element, alpha, t_shift=-alpha)
        assert not s_alpha_member(element.map_keys(lambda key: ((key[0], key[1] + 1, key[2]), 1)), alpha)


@pytest.mark.unit
class TestContactCorrespondence:
    """D_f = Δ(f) d_t + d_t(f) E - H_f."""

    def test_constant(self):
        assert contact_field(ONE) == VectorField({(0, 0, 0): 2}, W2)

    def test_coordinate(self):
        expected = VectorField({(0, 1, 0): 2, (1, 0, 0b01): 1, (2, 0, 0b10): 1}, W2)
        assert contact_field(T) == expected

    def test_even_bracket(self):
        bracket = vf_bracket(contact_field(ONE), contact_field(T))
        assert bracket == VectorField({(0, 0, 0): 4}, W2)
        assert contact_bracket(ONE, T) == function(coefficient=2)
        assert bracket == contact_field(contact_bracket(ONE, T))

    def test_odd_fields(self):
        assert contact_field(X1) == VectorField({(0, 0, 0b01): 1, (2, 0, 0): -1}, W2)
        assert contact_field(Y1) == VectorField({(0, 0, 0b10): 1, (1, 0, 0): -1}, W2)

    def test_odd_bracket(self):
        bracket = vf_bracket(contact_field(X1), contact_field(Y1))
        assert bracket == VectorField({(0, 0, 0): -2}, W2)
        assert contact_bracket(X1, Y1) == function(coefficient=-1)
        assert bracket == contact_field(contact_bracket(X1, Y1))


@pytest.mark.integration
class TestContactGrid:
    """[D_f, D_g] = D_{f,g}_K over the monomial grid in P(4)."""

    def test_grid_passes(self):
        outcome = contact_outcome(1)
        assert outcome.passed, outcome.residual
        assert outcome.detail == f"{(3 * 16) ** 2} pairs"

    def test_grid_degrees_follow_the_range(self):
        assert {key[0] for f in contact_grid() for key in f.keys()} == set(range(-3, 4))
        assert len(contact_grid()) == 7 * 16
        assert len(contact_grid(2)) == 5 * 16

    @pytest.mark.slow
    def test_default_grid_passes(self):
        outcome = contact_outcome()
        assert outcome.passed, outcome.residual
        assert outcome.detail == f"{(7 * 16) ** 2} pairs"
