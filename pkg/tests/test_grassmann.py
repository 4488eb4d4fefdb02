#!/usr/bin/env python3
"""
Tests for the Grassmann algebra Λ(2N) and its deformation Λ_h(2N).
"""

import pytest

from hypothesis import given, settings
from hypothesis import strategies as st

from src.core.arithmetic.coefficient import param
from src.core.errors import MixedParity, ParseError
from src.core.grassmann.lambda_algebra import (
    LambdaElement,
    OddSpace,
    bits,
    grassmann_mul,
    lambda_h_mul,
    mask_parity,
    monomial_mul,
    odd_derivative,
)

P4 = OddSpace(2)

elements = st.dictionaries(
    st.integers(min_value=0, max_value=15),
    st.integers(min_value=-3, max_value=3),
    max_size=4,
).map(lambda terms: LambdaElement(terms, P4))

homogeneous_elements = st.sampled_from([0, 1]).flatmap(lambda parity: st.dictionaries(
    st.sampled_from([mask for mask in range(16) if mask_parity(mask) == parity]),
    st.integers(min_value=-3, max_value=3),
    max_size=4,
)).map(lambda terms: LambdaElement(terms, P4))


def gen(name: str) -> LambdaElement:
    return LambdaElement.generator(name, P4)


@pytest.mark.unit
class TestOddSpace:
    """Bit layout of the odd generators."""

    def test_bit_layout(self):
        assert P4.xi(1) == 0
        assert P4.xi(2) == 1
        assert P4.eta(1) == 2
        assert P4.eta(2) == 3
        assert P4.full_mask == 15

    def test_aliases(self):
        assert P4.bit_for_name("ξ2") == 1
        assert P4.bit_for_name("eta1") == 2
        assert P4.bit_for_name("y2") == 3

    def test_unknown_generator(self):
        with pytest.raises(ParseError):
            P4.bit_for_name("z1")

    def test_index_out_of_range(self):
        with pytest.raises(ValueError):
            P4.xi(3)

    def test_needs_a_pair(self):
        with pytest.raises(ValueError):
            OddSpace(0)

    def test_swap_mask_sign(self):
        # x1 y2 -> y1 x2 = -x2 y1
        sign, mask = P4.swap_mask(0b1001)
        assert (sign, mask) == (-1, 0b0110)

    def test_bits(self):
        assert bits(0b1011) == [0, 1, 3]


@pytest.mark.unit
class TestGrassmannProduct:
    """The supercommutative product."""

    def test_anticommuting_generators(self):
        x1, y1 = gen("x1"), gen("y1")
        assert y1.wedge(x1) == -(x1.wedge(y1))
        assert x1.wedge(x1).is_zero()

    def test_monomial_sign(self):
        assert monomial_mul(0b0100, 0b0001) == (-1, 0b0101)
        assert monomial_mul(0b0001, 0b0001) is None

    def test_parity(self):
        assert gen("x1").parity() == "odd"
        assert gen("x1").wedge(gen("y1")).parity() == "even"
        with pytest.raises(MixedParity):
            LambdaElement({0: 1, 1: 1}, P4).parity_bit()

    def test_left_derivative(self):
        x1y1 = gen("x1").wedge(gen("y1"))
        assert odd_derivative(0, x1y1) == gen("y1")
        assert odd_derivative(2, x1y1) == -gen("x1")

    def test_printing(self):
        assert str(gen("x1").wedge(gen("y2")).scale(2)) == "2 x1 y2"
        assert str(LambdaElement({}, P4)) == "0"


@pytest.mark.unit
class TestDeformedProduct:
    """Λ_h: y_i x_j = h δ_ij - x_j y_i."""

    def test_contraction_of_a_pair(self):
        x1, y1 = gen("x1"), gen("y1")
        product = y1 * x1
        assert product == LambdaElement.scalar(param("h"), P4) - x1.wedge(y1)
        assert str(product) == "h - x1 y1"

    def test_distinct_pairs_anticommute(self):
        x1, y2 = gen("x1"), gen("y2")
        assert y2 * x1 == -(x1 * y2)

    def test_ordered_words_are_unchanged(self):
        x1, x2, y1 = gen("x1"), gen("x2"), gen("y1")
        assert (x1 * x2) * y1 == x1.wedge(x2).wedge(y1)

    def test_square_of_generator_vanishes(self):
        assert (gen("y2") * gen("y2")).is_zero()

    @settings(max_examples=25, deadline=None)
    @given(elements, elements, elements)
    def test_associative(self, a, b, c):
        assert lambda_h_mul(lambda_h_mul(a, b), c) == lambda_h_mul(a, lambda_h_mul(b, c))

    @settings(max_examples=25, deadline=None)
    @given(elements, elements)
    def test_h_zero_is_grassmann(self, a, b):
        assert lambda_h_mul(a, b).evaluate({"h": 0}) == grassmann_mul(a, b)


@pytest.mark.unit
class TestOddDerivativeProperties:
    """Left derivatives are odd derivations that anticommute."""

    @settings(max_examples=40, deadline=None)
    @given(st.integers(min_value=0, max_value=3), homogeneous_elements, elements)
    def test_leibniz(self, bit, u, v):
        sign = -1 if u.parity_bit() else 1
        expected = odd_derivative(bit, u).wedge(v) + u.wedge(odd_derivative(bit, v)).scale(sign)
        assert odd_derivative(bit, u.wedge(v)) == expected

    @settings(max_examples=40, deadline=None)
    @given(st.integers(min_value=0, max_value=3), st.integers(min_value=0, max_value=3), elements)
    def test_derivatives_anticommute(self, i, j, x):
        assert odd_derivative(i, odd_derivative(j, x)) == -odd_derivative(j, odd_derivative(i, x))
