#!/usr/bin/env python3
"""
Tests for labeled families, bracket closure and the 2-cocycle identity.
"""

import pytest
from fractions import Fraction

from src.core.arithmetic.coefficient import Coefficient
from src.core.contact.cocycles import (
    CocycleViolation,
    cocycle_verify,
    k4_cocycle_table,
    perturbed_s2_table,
    s2_cocycle_table,
)
from src.core.contact.field_families import (
    FORMAL_H,
    LabeledFamily,
    ZERO_H,
    format_combination,
    format_member,
    k4_basis,
    s_alpha_family,
    symbol,
)
from src.core.errors import ClosureFailure, UndefinedMode, UnknownLabel


@pytest.mark.unit
class TestCocycleTable:
    """Values of the tabulated cocycles."""

    def test_virasoro_part(self):
        table = s2_cocycle_table()
        assert table.value(("L", 2), ("L", -2)) == Fraction(1, 2)
        assert table.value(("L", 1), ("L", -1)).is_zero()

    def test_reversed_pair_is_skew(self):
        table = s2_cocycle_table()
        assert table.value(("E", 1), ("F", -1)) == Fraction(1, 6)
        assert table.value(("F", -1), ("E", 1)) == Fraction(-1, 6)

    def test_supported_on_zero_mode_sum(self):
        table = s2_cocycle_table()
        assert table.value(("L", 2), ("L", -1)).is_zero()

    def test_unlisted_pair_is_zero(self):
        assert s2_cocycle_table().value(("E", 1), ("E", -1)).is_zero()

    def test_k4_table(self):
        table = k4_cocycle_table()
        assert table.value(("L", 2), ("G3", -2)) == -2
        assert ("Q", "G0") in table.pairs()


@pytest.mark.unit
class TestLabeledFamilies:
    """Element construction and decomposition."""

    def test_g3_at_mode_zero_is_undefined(self, k4):
        with pytest.raises(UndefinedMode):
            k4.element("G3", 0)
        with pytest.raises(UndefinedMode):
            k4_basis("G3", 0, ZERO_H)
        assert ("G3", 0) not in k4.members(0)
        assert len(k4.members(0)) == 15

    def test_deformed_g3_at_mode_zero_is_central(self, h):
        assert k4_basis("G3", 0, FORMAL_H) == symbol(h, 0, 0)

    def test_unknown_label(self, k4):
        with pytest.raises(UnknownLabel):
            k4_basis("W", 0)
        with pytest.raises(UnknownLabel):
            k4.element("W", 0)

    def test_unknown_h_mode(self):
        with pytest.raises(ValueError):
            k4_basis("L", 0, "quantum")

    def test_witt_bracket_decomposes(self, k4):
        assert k4.decompose_bracket(("L", 1), ("L", 2)) == {("L", 3): 1}

    def test_elements_are_cached(self, k4):
        assert k4.element("Q", 1) is k4.element("Q", 1)

    def test_format(self):
        assert format_member(("R12", -1)) == "R12[-1]"
        assert format_combination({("L", 1): 1, ("E", 0): 2}) == "2 E[0] + L[1]"

    def test_format_accepts_plain_numbers(self, alpha):
        assert format_combination({("L", 1): -1, ("E", 0): Fraction(1, 2)}) == "1/2 E[0] - L[1]"
        assert format_combination({("L", 1): Coefficient(3)}) == "3 L[1]"
        assert format_combination({("Q", 0): alpha}) == "alpha Q[0]"

    def test_format_decomposition(self, k4):
        assert format_combination(k4.decompose_bracket(("L", 1), ("L", 2))) == "L[3]"

    def test_closure_failure_carries_element(self):
        family = LabeledFamily("toy", ("A",), lambda label, n: symbol(1, n, 0),
                               lambda a, b: symbol(1, 7, 7), {"A": 0})
        with pytest.raises(ClosureFailure) as excinfo:
            family.decompose_bracket(("A", 0), ("A", 0))
        assert excinfo.value.element == symbol(1, 7, 7)
        assert len(family.closure_failures(0)) == 1


@pytest.mark.unit
class TestCocycleIdentity:
    """The super cocycle identity on a mode window."""

    def test_s2_cocycle(self, s2):
        assert cocycle_verify(s2_cocycle_table(), s2, 2) == []

    def test_perturbed_table_is_detected(self, s2):
        violations = cocycle_verify(perturbed_s2_table(), s2, 3)
        assert violations
        assert all(isinstance(v, CocycleViolation) for v in violations)
        assert all(sum(member[1] for member in (v.a, v.b, v.c)) == 0 for v in violations)

    @pytest.mark.slow
    def test_k4_cocycle(self, k4):
        assert cocycle_verify(k4_cocycle_table(), k4, 1) == []


@pytest.mark.slow
@pytest.mark.integration
class TestClosure:
    """Brackets of the families stay inside the families."""

    def test_s2_closure(self, s2):
        assert s2.closure_failures(2) == []

    def test_k4_closure(self, k4):
        assert k4.closure_failures(1) == []

    @pytest.mark.parametrize("copy", [1, 2])
    def test_s_alpha_copies(self, copy, alpha):
        assert s_alpha_family(copy, alpha).closure_failures(1) == []
