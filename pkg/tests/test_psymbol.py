#!/usr/bin/env python3
"""
Tests for pseudodifferential symbols: Poisson bracket, the o_h product,
truncation windows and the first-order contraction.
"""

import pytest

from hypothesis import given, settings
from hypothesis import strategies as st

from src.core.contact.field_families import symbol
from src.core.errors import MixedParity, TruncatedOperand
from src.core.grassmann.lambda_algebra import mask_parity
from src.core.symbols.psymbol import (
    PSymbol,
    circ_h,
    contraction_first_order,
    deformed_bracket,
    poisson_bracket,
    super_commutator_h,
    supercommutative_mul,
    window_difference,
    window_equal,
)

T = symbol(1, 1, 0)
TAU = symbol(1, 0, 1)
TAU_INVERSE = symbol(1, 0, -1)

EVEN_MASKS = [mask for mask in range(16) if not mask_parity(mask)]
ODD_MASKS = [mask for mask in range(16) if mask_parity(mask)]


def homogeneous_symbols(min_tau: int = -2):
    """Exact symbols of a single parity, even or odd."""
    def build(masks):
        return st.dictionaries(
            st.tuples(st.integers(min_value=-2, max_value=2), st.integers(min_value=min_tau, max_value=2),
                      st.sampled_from(masks)),
            st.integers(min_value=-3, max_value=3),
            max_size=3,
        ).map(PSymbol)
    return st.one_of(build(EVEN_MASKS), build(ODD_MASKS))


def sign(a: PSymbol, b: PSymbol) -> int:
    return -1 if a.parity_bit() and b.parity_bit() else 1


@pytest.mark.unit
class TestPoissonBracket:
    """{A, B} = d_tau A d_t B - d_t A d_tau B + odd part."""

    def test_canonical_pair(self):
        assert poisson_bracket(TAU, T) == symbol(1, 0, 0)
        assert poisson_bracket(T, TAU) == symbol(-1, 0, 0)

    @pytest.mark.parametrize("n", [-2, -1, 0, 1, 2])
    @pytest.mark.parametrize("m", [-2, 0, 3])
    def test_witt_relations(self, n, m):
        lhs = poisson_bracket(symbol(1, n + 1, 1), symbol(1, m + 1, 1))
        assert lhs == symbol(m - n, n + m + 1, 1)

    def test_odd_generators(self):
        x1, y1 = symbol(1, 0, 0, "x1"), symbol(1, 0, 0, "y1")
        assert poisson_bracket(x1, y1) == symbol(1, 0, 0)
        assert poisson_bracket(y1, x1) == symbol(1, 0, 0)
        assert poisson_bracket(x1, symbol(1, 0, 0, "x2")).is_zero()

    def test_t_y1_with_t_x1(self):
        assert str(poisson_bracket(symbol(1, 1, 0, "y1"), symbol(1, 1, 0, "x1"))) == "t^2"

    def test_mixed_parity_rejected(self):
        mixed = symbol(1, 0, 0, "x1") + T
        with pytest.raises(MixedParity):
            poisson_bracket(mixed, T)

    def test_truncated_operand_rejected(self):
        truncated = circ_h(TAU_INVERSE, symbol(1, -1, 0), cutoff=-6)
        with pytest.raises(TruncatedOperand):
            poisson_bracket(truncated, T)


@pytest.mark.unit
class TestCircH:
    """The deformed product A o_h B."""

    def test_tau_and_t(self, h):
        assert super_commutator_h(TAU, T) == PSymbol.monomial(h)
        assert deformed_bracket(TAU, T) == symbol(1, 0, 0)

    def test_terminating_series_is_exact(self, h):
        product = circ_h(TAU_INVERSE, T)
        assert product.is_exact
        assert product == symbol(1, 1, -1) - PSymbol.monomial(h, 0, -2)

    def test_infinite_series_is_truncated(self):
        product = circ_h(TAU_INVERSE, symbol(1, -1, 0), cutoff=-6)
        assert not product.is_exact
        assert product.truncation == -6
        assert product.min_tau() >= -6
        assert str(product).endswith("+ O(tau^-7)")

    def test_h_zero_is_supercommutative(self):
        a = symbol(1, 2, 1, "x1")
        b = symbol(3, -1, 2, "y1 x2")
        assert circ_h(a, b).at_h_zero() == supercommutative_mul(a, b)

    def test_odd_parts_use_deformed_product(self, h):
        assert circ_h(symbol(1, 0, 0, "y1"), symbol(1, 0, 0, "x1")) == PSymbol.monomial(h) - symbol(1, 0, 0, "x1 y1")


@pytest.mark.unit
class TestWindows:
    """Equality on the exact window of truncated symbols."""

    def test_window_equal_ignores_terms_below_floor(self):
        truncated = circ_h(TAU_INVERSE, symbol(1, -1, 0), cutoff=-6)
        exact_part = PSymbol({key: value for key, value in truncated.items()})
        assert window_equal(truncated, exact_part + symbol(5, 0, -9))
        assert window_difference(truncated, exact_part).is_zero()

    def test_window_difference_reports_residual(self):
        assert window_difference(T, TAU) == T - TAU


@pytest.mark.unit
class TestContraction:
    """lim (1/h)[A, B]_h = {A, B}."""

    def test_polynomial_symbols(self):
        verdict = contraction_first_order(symbol(1, 2, 0), symbol(1, 0, 2))
        assert verdict.passed
        assert verdict.expected == symbol(-4, 1, 1)

    def test_odd_symbols(self):
        verdict = contraction_first_order(symbol(1, 1, 0, "y1"), symbol(1, 0, 1, "x1"))
        assert verdict.passed

    def test_h_dependent_operands_are_flagged(self, h):
        verdict = contraction_first_order(PSymbol.monomial(h, 1, 0), TAU)
        assert not verdict.passed
        assert verdict.notes == ["operands depend on h"]


@pytest.mark.unit
class TestPoissonProperties:
    """Poisson superalgebra identities on random homogeneous symbols."""

    @settings(max_examples=40, deadline=None)
    @given(homogeneous_symbols(), homogeneous_symbols())
    def test_super_skew_symmetry(self, a, b):
        assert poisson_bracket(a, b) == -(poisson_bracket(b, a).scale(sign(a, b)))

    @settings(max_examples=25, deadline=None)
    @given(homogeneous_symbols(), homogeneous_symbols(), homogeneous_symbols())
    def test_super_jacobi(self, a, b, c):
        total = (poisson_bracket(a, poisson_bracket(b, c)).scale(sign(a, c))
                 + poisson_bracket(b, poisson_bracket(c, a)).scale(sign(b, a))
                 + poisson_bracket(c, poisson_bracket(a, b)).scale(sign(c, b)))
        assert total.is_zero()

    @settings(max_examples=25, deadline=None)
    @given(homogeneous_symbols(), homogeneous_symbols(), homogeneous_symbols())
    def test_leibniz(self, a, b, c):
        lhs = poisson_bracket(a, b * c)
        rhs = poisson_bracket(a, b) * c + (b * poisson_bracket(a, c)).scale(sign(a, b))
        assert lhs == rhs


@pytest.mark.unit
class TestCircHProperties:
    """The o_h product on symbols polynomial in tau."""

    @settings(max_examples=20, deadline=None)
    @given(homogeneous_symbols(min_tau=0), homogeneous_symbols(min_tau=0), homogeneous_symbols(min_tau=0))
    def test_associative(self, a, b, c):
        left = circ_h(circ_h(a, b), c)
        right = circ_h(a, circ_h(b, c))
        assert left.is_exact and right.is_exact
        assert left == right
