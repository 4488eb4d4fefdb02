#!/usr/bin/env python3
"""
Tests for the Weyl algebra with d = t d/dt and (2|2) supermatrices over it.
"""

import pytest

from hypothesis import given, settings
from hypothesis import strategies as st

from src.core.errors import MixedParity
from src.core.weyl.embeddings import gamma_matrix
from src.core.weyl.supermatrix import WeylSuperMatrix, supermatrix_bracket
from src.core.weyl.weyl_algebra import WeylElement, weyl_commutator, weyl_mul

D = WeylElement.d_power()
T = WeylElement.t_power(1)
ONE = WeylElement.scalar(1)

weyl_elements = st.dictionaries(
    st.tuples(st.integers(min_value=-2, max_value=2), st.integers(min_value=0, max_value=2)),
    st.integers(min_value=-3, max_value=3),
    max_size=3,
).map(WeylElement)


@pytest.mark.unit
class TestWeylElement:
    """Normal ordering through d t^b = t^b (d + b)."""

    def test_d_past_t(self):
        assert str(D * T) == "t d + t"
        assert weyl_commutator(D, T) == T

    def test_d_past_inverse_power(self):
        assert D * WeylElement.t_power(-1) == WeylElement({(-1, 1): 1, (-1, 0): -1})

    def test_powers(self):
        assert D ** 2 == WeylElement.d_power(2)
        assert T ** 0 == ONE

    def test_highest_d_power_prints_first(self):
        element = WeylElement({(0, 0): 3, (2, 1): 1, (0, 2): -1})
        assert str(element) == "-d^2 + t^2 d + 3"

    def test_negative_d_power_rejected(self):
        with pytest.raises(ValueError):
            WeylElement.monomial(1, 0, -1)
        with pytest.raises(ValueError):
            D ** -1

    def test_action_on_powers(self):
        element = WeylElement({(1, 1): 1})
        assert element.act_on_power(2) == {3: 2}
        assert element.act_on_power(2, mu=1) == {3: 3}

    @settings(max_examples=25, deadline=None)
    @given(weyl_elements, weyl_elements, weyl_elements)
    def test_associative(self, x, y, z):
        assert weyl_mul(weyl_mul(x, y), z) == weyl_mul(x, weyl_mul(y, z))


@pytest.mark.unit
class TestWeylSuperMatrix:
    """Block structure, products and the matrix superbracket."""

    def test_sl2_in_the_odd_block(self):
        assert supermatrix_bracket(gamma_matrix("E3"), gamma_matrix("F3")) == gamma_matrix("H3")

    def test_odd_matrices_anticommute_into_even(self):
        product = supermatrix_bracket(gamma_matrix("T1"), gamma_matrix("T1"))
        assert product.parity() == "even"

    def test_parity(self):
        assert gamma_matrix("T1").parity_bit() == 1
        assert gamma_matrix("E2").parity_bit() == 0
        mixed = WeylSuperMatrix.from_entries({(1, 1): ONE, (1, 3): ONE})
        with pytest.raises(MixedParity):
            mixed.parity_bit()

    def test_entry_outside_the_matrix(self):
        with pytest.raises(IndexError):
            WeylSuperMatrix.from_entries({(5, 1): ONE})

    def test_identity_is_neutral(self):
        matrix = gamma_matrix("D1", 2)
        assert WeylSuperMatrix.identity() @ matrix == matrix
        assert matrix @ WeylSuperMatrix.identity() == matrix

    def test_entries(self):
        matrix = gamma_matrix("E3")
        assert matrix.entry(3, 4) == ONE
        assert matrix.entry(4, 3).is_zero()
        assert list(matrix.entries()) == [(3, 4)]

    def test_printing(self):
        lines = str(gamma_matrix("H3")).splitlines()
        assert len(lines) == 5
        assert set(lines[2]) == {"-"}
        assert all("|" in line for i, line in enumerate(lines) if i != 2)
