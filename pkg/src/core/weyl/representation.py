#!/usr/bin/env python3
"""
The module V^mu = t^mu C[t, t^-1] ⊗ Λ(ξ1, ξ2) of K'(4)^ with h fixed to 1.

Basis vectors v^s_m are keyed (s, m) with s = 0 (the 1/(m+mu) normalized
even vector), 1, 2 (t^(m+mu) ξ_i) and 3 (t^(m+mu) ξ1ξ2). Matrices act in
the ordered basis (v^0, v^3 | v^1, v^2).
"""

import logging
from typing import Callable, Dict, Iterable, List, Optional, Tuple

from ..arithmetic.coefficient import Coefficient, Scalar, as_coefficient, param
from ..arithmetic.formatting import format_linear
from ..arithmetic.term_map import TermMap, accumulate
from ..contact.cocycles import k4_cocycle_table
from ..contact.field_families import K4_LABELS, format_member, k4_family
from ..errors import UnknownLabel
from .embeddings import embed_I
from .supermatrix import SIZE, WeylSuperMatrix

logger = logging.getLogger(__name__)

# matrix row/column (1-based) -> basis superscript
BASIS_ORDER: Tuple[int, ...] = (0, 3, 1, 2)
POSITION = {s: i + 1 for i, s in enumerate(BASIS_ORDER)}


class VVector(TermMap):
    """Finite combination of v^s_m."""

    @classmethod
    def basis(cls, s: int, m: int, coefficient: Scalar = 1) -> "VVector":
        if s not in POSITION:
            raise ValueError(f"Unknown basis superscript {s}; expected 0, 1, 2 or 3")
        return cls({(s, m): as_coefficient(coefficient)})

    def __str__(self) -> str:
        return format_linear((value, [f"v{s}[{m}]"]) for (s, m), value in self.terms())

    def __repr__(self) -> str:
        return f"VVector({self})"


# (label, source superscript) -> (target superscript, factor(n, m+mu))
Rule = Tuple[int, Callable[[int, Coefficient], Coefficient]]

_ONE = Coefficient(1)


def _unit(n: int, x: Coefficient) -> Coefficient:
    return _ONE


def _minus(n: int, x: Coefficient) -> Coefficient:
    return -_ONE


def _rules() -> Dict[str, Dict[int, Rule]]:
    unit, minus = _unit, _minus
    return {
        "L": {0: (0, lambda n, x: x + n), 1: (1, lambda n, x: x), 2: (2, lambda n, x: x), 3: (3, lambda n, x: x)},
        "X1": {0: (1, unit), 2: (3, lambda n, x: x)},
        "X2": {0: (2, unit), 1: (3, lambda n, x: -x)},
        "Q": {0: (3, unit)},
        "Y1": {1: (0, lambda n, x: x + n), 3: (2, unit)},
        "Y2": {2: (0, lambda n, x: x + n), 3: (1, minus)},
        "R11": {1: (1, unit), 3: (3, unit)},
        "R22": {2: (2, unit), 3: (3, unit)},
        "R12": {2: (1, unit)},
        "R21": {1: (2, unit)},
        "Z1": {1: (3, unit)},
        "Z2": {2: (3, unit)},
        "G0": {3: (0, minus)},
        "G1": {2: (0, minus)},
        "G2": {1: (0, unit)},
        "G3": {s: (s, unit) for s in BASIS_ORDER},
    }


RULES = _rules()


def rep_action(label: str, n: int, vector: VVector, mu: Optional[Scalar] = None) -> VVector:
    """
    Action of label[n] on a vector of V^mu; pairs without a rule act as zero.

    G3[0] is the central element and acts as the identity.
    """
    if label not in RULES:
        raise UnknownLabel(f"Unknown K'(4) label: {label}")
    mu = Coefficient(0) if mu is None else as_coefficient(mu)
    rules = RULES[label]
    terms: Dict[Tuple[int, int], Coefficient] = {}
    for (s, m), value in vector.items():
        rule = rules.get(s)
        if rule is None:
            continue
        target, factor = rule
        accumulate(terms, (target, m + n), value * factor(n, mu + m))
    return VVector(terms)


def matrix_action(matrix: WeylSuperMatrix, vector: VVector, mu: Optional[Scalar] = None) -> VVector:
    """Apply a Weyl supermatrix to a vector; d acts on v_m by m + mu."""
    terms: Dict[Tuple[int, int], Coefficient] = {}
    entries = matrix.entries()
    for (s, m), value in vector.items():
        column = POSITION[s]
        for row in range(1, SIZE + 1):
            entry = entries.get((row, column))
            if entry is None:
                continue
            for exponent, factor in entry.act_on_power(m, mu).items():
                accumulate(terms, (BASIS_ORDER[row - 1], exponent), value * factor)
    return VVector(terms)


def rep_matrix(label: str, n: int, m: int, mu: Optional[Scalar] = None) -> List[List[Coefficient]]:
    """4x4 matrix of label[n] from the span of v_m to the span of v_(m+n), basis order (v0, v3, v1, v2)."""
    matrix = [[Coefficient(0)] * SIZE for _ in range(SIZE)]
    for column, s in enumerate(BASIS_ORDER):
        image = rep_action(label, n, VVector.basis(s, m), mu)
        for (target, _), value in image.items():
            matrix[POSITION[target] - 1][column] = value
    return matrix


def consistency_failures(mode_range: int, m_range: int = 4,
                         mu: Optional[Scalar] = None,
                         labels: Iterable[str] = K4_LABELS) -> List[str]:
    """Compare rep_action with the action of embed_I on every basis vector in the window."""
    failures: List[str] = []
    for label in labels:
        for n in range(-mode_range, mode_range + 1):
            matrix = embed_I(label, n)
            for m in range(-m_range, m_range + 1):
                for s in BASIS_ORDER:
                    v = VVector.basis(s, m)
                    by_rule = rep_action(label, n, v, mu)
                    by_matrix = matrix_action(matrix, v, mu)
                    if by_rule != by_matrix:
                        failures.append(f"{label}[{n}] on v{s}[{m}]: rule {by_rule}, matrix {by_matrix}")
    logger.info(f"Representation consistency: {len(failures)} mismatches")
    return failures


def representation_failures(mode_range: int, m_range: int = 2,
                            mu: Optional[Scalar] = None) -> List[str]:
    """
    ρ(a)ρ(b) - (-1)^(p(a)p(b)) ρ(b)ρ(a) = ρ([a, b]) + c(a, b) on V^mu, for
    field pairs with modes in [-mode_range, mode_range] and vectors v^s_m
    with |m| <= m_range. G3[0] acts as the identity.
    """
    family = k4_family()
    table = k4_cocycle_table()
    members = family.members_in_range(mode_range)
    failures: List[str] = []
    for a in members:
        for b in members:
            sign = -1 if family.parity(a[0]) and family.parity(b[0]) else 1
            coordinates = family.decompose_bracket(a, b)
            central = table.value(a, b)
            for m in range(-m_range, m_range + 1):
                for s in BASIS_ORDER:
                    v = VVector.basis(s, m)
                    lhs = rep_action(a[0], a[1], rep_action(b[0], b[1], v, mu), mu) \
                        - rep_action(b[0], b[1], rep_action(a[0], a[1], v, mu), mu).scale(sign)
                    rhs = v.scale(central)
                    for (label, n), value in coordinates.items():
                        rhs = rhs + rep_action(label, n, v, mu).scale(value)
                    if lhs != rhs:
                        failures.append(f"[{format_member(a)}, {format_member(b)}] on v{s}[{m}]: {lhs - rhs}")
    logger.info(f"Representation property: {len(failures)} mismatches")
    return failures


def formal_mu() -> Coefficient:
    return param("mu")
