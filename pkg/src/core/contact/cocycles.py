#!/usr/bin/env python3
"""
2-cocycles on labeled families and the super cocycle identity.

A table stores c(a_n, b_k) for the label pairs its defining relation lists;
all other pairs are zero and the reversed pairs follow from super
skew-symmetry c(b, a) = -(-1)^(p(a)p(b)) c(a, b).
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Tuple

from ..arithmetic.coefficient import ZERO, Coefficient
from .field_families import K4_PARITY, S2_PARITY, LabeledFamily, Member, format_member

logger = logging.getLogger(__name__)

ModeRule = Callable[[int], Fraction]


class CocycleTable:
    """Bilinear rule c(a_n, b_k) supported on n + k = 0."""

    def __init__(self, name: str, rules: Dict[Tuple[str, str], ModeRule], parity: Dict[str, int]):
        self.name = name
        self._rules = dict(rules)
        self._parity = dict(parity)

    def pairs(self) -> List[Tuple[str, str]]:
        return list(self._rules)

    def value(self, a: Member, b: Member) -> Coefficient:
        if a[1] + b[1] != 0:
            return ZERO
        rule = self._rules.get((a[0], b[0]))
        if rule is not None:
            return Coefficient(rule(a[1]))
        rule = self._rules.get((b[0], a[0]))
        if rule is not None:
            value = Coefficient(rule(b[1]))
            if self._parity.get(a[0], 0) and self._parity.get(b[0], 0):
                return value
            return -value
        return ZERO

    def __repr__(self) -> str:
        return f"CocycleTable({self.name}, pairs={self.pairs()})"


@dataclass
class CocycleViolation:
    """A triple where the cyclic sum is non-zero."""

    a: Member
    b: Member
    c: Member
    value: Coefficient

    def __str__(self) -> str:
        return f"({format_member(self.a)}, {format_member(self.b)}, {format_member(self.c)}): {self.value}"


def s2_cocycle_table() -> CocycleTable:
    """The central extension of S'(2, 0)."""
    return CocycleTable("S'(2,0)^", {
        ("L", "L"): lambda n: Fraction(n ** 3 - n, 12),
        ("E", "F"): lambda n: Fraction(n, 6),
        ("H", "H"): lambda n: Fraction(n, 3),
        ("h", "p"): lambda n: Fraction(-(n ** 2 - n), 6),
        ("x", "y"): lambda n: Fraction(-(n ** 2 + n), 6),
    }, S2_PARITY)


def k4_cocycle_table() -> CocycleTable:
    """The central extension of K'(4) realized through the G fields."""
    return CocycleTable("K'(4)^", {
        ("L", "G3"): lambda n: Fraction(-n),
        ("X1", "G2"): lambda n: Fraction(1),
        ("X2", "G1"): lambda n: Fraction(-1),
        ("Q", "G0"): lambda n: Fraction(1),
    }, K4_PARITY)


def perturbed_s2_table() -> CocycleTable:
    """Mutation control: c(L_n, L_k) = n^5 delta is not a cocycle."""
    return CocycleTable("S'(2,0) n^5", {("L", "L"): lambda n: Fraction(n ** 5)}, S2_PARITY)


def cocycle_verify(table: CocycleTable, family: LabeledFamily, mode_range: int) -> List[CocycleViolation]:
    """
    Check (-1)^(p(a)p(c)) c([a,b],c) + cyclic = 0 on every triple with modes in
    [-mode_range, mode_range] summing to zero.

    Returns:
        List of violations; empty means the identity holds on the window.
    """
    violations: List[CocycleViolation] = []
    members = family.members_in_range(mode_range)
    by_mode: Dict[int, List[Member]] = {}
    for member in members:
        by_mode.setdefault(member[1], []).append(member)

    def parity(member: Member) -> int:
        return family.parity(member[0])

    def term(x: Member, y: Member, z: Member) -> Coefficient:
        total = ZERO
        for member, coefficient in family.decompose_bracket(x, y).items():
            value = table.value(member, z)
            if not value.is_zero():
                total = total + coefficient * value
        return -total if parity(x) and parity(z) else total

    checked = 0
    for a in members:
        for b in members:
            for c in by_mode.get(-(a[1] + b[1]), []):
                checked += 1
                value = term(a, b, c) + term(b, c, a) + term(c, a, b)
                if not value.is_zero():
                    violations.append(CocycleViolation(a, b, c, value))
    logger.info(f"{table.name} on {family.name}: {checked} triples, {len(violations)} violations")
    return violations
