#!/usr/bin/env python3
"""
Suites over the labeled field families: closure, cocycles, the contact
correspondence and the h -> 0 contraction.
"""

import itertools
import logging
from typing import List

from ..context import VerificationContext
from ..contact.cocycles import cocycle_verify, k4_cocycle_table, perturbed_s2_table, s2_cocycle_table
from ..contact.field_families import (
    FORMAL_H,
    K4_LABELS,
    Member,
    P4,
    S2_LABELS,
    W2,
    ZERO_H,
    codimension_element,
    format_member,
    k4_basis,
    k4_family,
    s2_basis,
    s2_family,
    s_alpha_family,
)
from ..contact.superfunction import SuperFunction, contact_bracket
from ..contact.vector_field import VectorField, contact_field, field_symbol, s_alpha_member, vf_bracket
from ..gamma.generators import DEFORMED, POISSON, PSEUDO_H, PSEUDO_LIMIT, gamma_alpha_generators
from ..symbols.psymbol import contraction_first_order, poisson_bracket, window_difference, window_equal
from .checks import Check, CheckOutcome, alpha_tag, expect_failure, from_failures
from .gamma_suites import limit_outcome

logger = logging.getLogger(__name__)

CONTROL_WINDOW = 3


def _closure_outcome(family, mode_range: int) -> CheckOutcome:
    failures = family.closure_failures(mode_range)
    rendered = (f"[{format_member(a)}, {format_member(b)}]" for a, b, _ in failures)
    return from_failures(rendered, f"{len(family.members_in_range(mode_range))} fields")


def k4_closure(context: VerificationContext) -> List[Check]:
    window = context.config.mode_range + 1
    return [Check(f"closure[K'(4)]@modes<={window}", lambda: _closure_outcome(k4_family(), window))]


def cocycles(context: VerificationContext) -> List[Check]:
    window = context.config.mode_range
    # n^5 first fails on the triple (1, 2, -3)
    control_window = max(window, CONTROL_WINDOW)
    return [
        Check("cocycle[S'(2,0)]", lambda: from_failures(cocycle_verify(s2_cocycle_table(), s2_family(), window))),
        Check("cocycle[K'(4)]", lambda: from_failures(cocycle_verify(k4_cocycle_table(), k4_family(), window))),
        Check("cocycle-control[n^5]",
              lambda: expect_failure(cocycle_verify(perturbed_s2_table(), s2_family(), control_window))),
    ]


# ----------------------------------------------------------------------
# contact-fields
# ----------------------------------------------------------------------

def witt_field(n: int) -> VectorField:
    """L_n = -t^(n+1) d_t."""
    return VectorField({(0, n + 1, 0): -1}, W2)


def witt_outcome(window: int) -> CheckOutcome:
    failures = []
    for n, m in itertools.product(range(-window, window + 1), repeat=2):
        bracket = vf_bracket(witt_field(n), witt_field(m))
        expected = witt_field(n + m).scale(n - m)
        if bracket != expected:
            failures.append(f"[L{n}, L{m}] = {bracket}")
        symbols = poisson_bracket(field_symbol(witt_field(n)), field_symbol(witt_field(m)))
        if symbols != field_symbol(expected):
            failures.append(f"{{l{n}, l{m}}} = {symbols}")
    return from_failures(failures, f"{(2 * window + 1) ** 2} pairs")


def divergence_free_outcome(window: int) -> CheckOutcome:
    failures = [f"{label}[{n}]" for label in S2_LABELS for n in range(-window, window + 1)
                if not s_alpha_member(s2_basis(label, n), 0)]
    return from_failures(failures, "S'(2,0) basis in S(2,0)")


def codimension_outcome(context: VerificationContext, window: int) -> CheckOutcome:
    element = codimension_element()
    problems = []
    if not s_alpha_member(element, context.alpha, t_shift=-context.alpha):
        problems.append("t^-alpha x1 y1 d_t is not in S(2, alpha)")
    family = s2_family()
    for n in range(-window, window + 1):
        if family.span(n).contains(element):
            problems.append(f"x1 y1 d_t lies in the S'(2,0) span at mode {n}")
    return from_failures(problems, "codimension one")


def shift_outcome(window: int) -> CheckOutcome:
    """t^-s D maps S(2, 0) into S(2, s)."""
    failures = []
    for shift in range(-window, window + 1):
        for label in S2_LABELS:
            for n in range(-window, window + 1):
                moved = s2_basis(label, n).map_keys(lambda key, s=shift: ((key[0], key[1] - s, key[2]), 1))
                if not s_alpha_member(moved, shift):
                    failures.append(f"t^{-shift} {label}[{n}]")
    return from_failures(failures, f"shifts {-window}..{window}")


def contact_grid(degree_range: int = 3) -> List[SuperFunction]:
    """Monomials t^k times an odd word, |k| <= degree_range."""
    return [SuperFunction.monomial(1, degree, mask, P4)
            for degree in range(-degree_range, degree_range + 1) for mask in range(1 << P4.size)]


def contact_outcome(degree_range: int = 3) -> CheckOutcome:
    """[D_f, D_g] = D_{f,g}_K on monomials."""
    functions = contact_grid(degree_range)
    fields = [contact_field(f) for f in functions]
    failures = []
    for (f, df), (g, dg) in itertools.product(zip(functions, fields), repeat=2):
        residual = vf_bracket(df, dg) - contact_field(contact_bracket(f, g))
        if not residual.is_zero():
            failures.append(f"({f}, {g}): {residual}")
    return from_failures(failures, f"{len(functions) ** 2} pairs")


def contact_fields(context: VerificationContext) -> List[Check]:
    window = context.config.mode_range
    tag = alpha_tag(context.alpha)
    checks = [
        Check("witt[vector-fields,symbols]", lambda: witt_outcome(window)),
        Check("divergence-free[S'(2,0)]", lambda: divergence_free_outcome(window)),
        Check(f"codimension[S(2,alpha)]@alpha={tag}", lambda: codimension_outcome(context, window)),
        Check("closure[S'(2,0)]", lambda: _closure_outcome(s2_family(), window)),
        Check("shift[S(2,0)->S(2,s)]", lambda: shift_outcome(window)),
        Check(f"contact-bracket[D_f]@degrees<={window}", lambda: contact_outcome(window)),
    ]
    for copy in (1, 2):
        checks.append(Check(f"closure[S{copy}_alpha]@alpha={tag}",
                            lambda c=copy: _closure_outcome(s_alpha_family(c, context.alpha), window)))
    return checks


# ----------------------------------------------------------------------
# contraction
# ----------------------------------------------------------------------

def generator_contraction_outcome(context: VerificationContext) -> CheckOutcome:
    cutoff = context.config.cutoff
    generators = gamma_alpha_generators(context.alpha, POISSON, cutoff)
    failures = []
    for (a, x), (b, y) in itertools.product(generators.items(), repeat=2):
        verdict = contraction_first_order(x, y, cutoff)
        if not verdict.passed:
            failures.append(f"({a}, {b}): {verdict.discrepancy}")
    return from_failures(failures, f"{len(generators) ** 2} pairs")


def contraction_members(window: int) -> List[Member]:
    family = k4_family()
    return [member for n in range(-window, window + 1) for member in family.members(n)]


def field_contraction_outcome(context: VerificationContext) -> CheckOutcome:
    cutoff = context.config.cutoff
    family = k4_family()
    members = contraction_members(context.config.mode_range)
    failures = []
    for a, b in itertools.product(members, repeat=2):
        verdict = contraction_first_order(family.element(*a), family.element(*b), cutoff)
        if not verdict.passed:
            failures.append(f"({format_member(a)}, {format_member(b)}): {verdict.discrepancy}")
    return from_failures(failures, f"{len(members) ** 2} pairs")


def deformed_fields_outcome(context: VerificationContext) -> CheckOutcome:
    """i_h fields at h = 0 are the i_0 fields; G3[0] = h is central and vanishes."""
    cutoff = context.config.cutoff
    failures = []
    for label in K4_LABELS:
        for n in range(-context.config.mode_range, context.config.mode_range + 1):
            deformed = k4_basis(label, n, FORMAL_H, cutoff).at_h_zero()
            if label == "G3" and n == 0:
                if not deformed.is_zero():
                    failures.append(f"G3[0] at h = 0 is {deformed}")
                continue
            plain = k4_basis(label, n, ZERO_H, cutoff)
            if not window_equal(deformed, plain):
                failures.append(f"{label}[{n}]: {window_difference(deformed, plain)}")
    return from_failures(failures, "i_h -> i_0")


def contraction(context: VerificationContext) -> List[Check]:
    cutoff = context.config.cutoff
    alpha = context.alpha
    tag = alpha_tag(alpha)
    window = context.config.mode_range
    return [
        Check(f"contraction[poisson generators]@alpha={tag}", lambda: generator_contraction_outcome(context)),
        Check(f"contraction[K'(4) modes {-window}..{window}]", lambda: field_contraction_outcome(context)),
        Check(f"limit[deformed->poisson]@alpha={tag}", lambda: limit_outcome(DEFORMED, POISSON, alpha, cutoff)),
        Check(f"limit[pseudo_h->pseudo_limit]@alpha={tag}",
              lambda: limit_outcome(PSEUDO_H, PSEUDO_LIMIT, alpha, cutoff)),
        Check("limit[i_h->i_0]", lambda: deformed_fields_outcome(context)),
    ]
