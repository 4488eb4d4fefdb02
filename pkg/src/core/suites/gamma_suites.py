#!/usr/bin/env python3
"""
Suites for Γ(2, -1-α, α-1) and its realizations.

- gamma-thm41 (alias gamma-poisson): Poisson-symbol realization, generation, Jacobi boundary, scaling
- gamma-thm52 (alias gamma-deformed): h-deformed realization and its h -> 0 limit, odd zero modes
- gamma-thm63 (alias gamma-matrix): (2|2) Weyl matrices and their I-dictionary
- remark64 (alias gamma-pseudo): pseudodifferential realizations built from the K'(4) fields
- psl: the psl(2|2) degenerations at α = ±1
"""

import logging
from typing import List

from ..arithmetic.coefficient import Coefficient, param
from ..context import VerificationContext
from ..contact.field_families import S_ALPHA_LABELS, S_ALPHA_PARITY, ZERO_H, s_alpha_basis
from ..gamma.gamma_algebra import build_gamma, gamma_for_alpha, jacobi_check
from ..gamma.generators import (
    DEFORMED,
    MATRIX,
    POISSON,
    PSEUDO_H,
    PSEUDO_LIMIT,
    gamma_alpha_generators,
    odd_generators,
    phi_map,
    variant_bracket,
)
from ..gamma.verifiers import (
    contraction_limit_check,
    difference,
    generate_from_odd,
    hom_check,
    matrix_dictionary_check,
    psl_check,
    pseudo_dictionary_check,
    relation_check,
    same_element,
    scaling_isomorphism_check,
)
from .checks import Check, CheckOutcome, alpha_tag, expect, expect_failure, from_failures

logger = logging.getLogger(__name__)


def hom_outcome(variant: str, alpha: Coefficient, cutoff: int) -> CheckOutcome:
    verdict = hom_check(phi_map(alpha, variant, cutoff=cutoff), gamma_for_alpha(alpha), variant_bracket(variant, cutoff))
    detail = f"{verdict.pairs_checked} pairs, injective={verdict.injective}"
    if verdict.passed:
        return CheckOutcome(True, "", detail)
    outcome = from_failures(verdict.failures, detail)
    if not verdict.injective:
        outcome.residual = ("images are linearly dependent; " + outcome.residual).rstrip("; ")
    outcome.passed = False
    return outcome


def expected_generated_dimension(alpha: Coefficient) -> int:
    """17 when every σ_i is non-zero, 14 when one sp(2) factor drops out of [odd, odd]."""
    sigmas = gamma_for_alpha(alpha).sigmas
    return 17 if all(not sigma.is_zero() for sigma in sigmas) else 14


def generation_outcome(variant: str, alpha: Coefficient, cutoff: int) -> CheckOutcome:
    generators = gamma_alpha_generators(alpha, variant, cutoff)
    generated = generate_from_odd(odd_generators(generators), variant_bracket(variant, cutoff))
    expected = expected_generated_dimension(alpha)
    return expect(
        generated.dimension == expected,
        f"dimension {generated.dimension}, expected {expected}",
        f"dimension {generated.dimension} after {generated.rounds} rounds",
    )


def relations_outcome(variant: str, alpha: Coefficient, cutoff: int) -> CheckOutcome:
    generators = gamma_alpha_generators(alpha, variant, cutoff)
    return from_failures(relation_check(generators, variant_bracket(variant, cutoff), alpha), "8 relations")


def limit_outcome(deformed: str, limit: str, alpha: Coefficient, cutoff: int) -> CheckOutcome:
    verdict = contraction_limit_check(
        gamma_alpha_generators(alpha, deformed, cutoff), gamma_alpha_generators(alpha, limit, cutoff)
    )
    detail = f"exact: {len(verdict.matched)}, windowed: {', '.join(verdict.windowed) or 'none'}"
    return from_failures((f"{label}: {residual}" for label, residual in verdict.failures.items()), detail)


def zero_mode_outcome(copy: int, alpha: Coefficient, h_deformed: bool) -> CheckOutcome:
    """The n = 0 odd fields of a S'(2, alpha) copy are the odd Γ_α generators."""
    generators = gamma_alpha_generators(alpha, DEFORMED if h_deformed else POISSON)
    failures = []
    for label in S_ALPHA_LABELS[copy]:
        if not S_ALPHA_PARITY[label]:
            continue
        field = s_alpha_basis(copy, label, 0, alpha, h_deformed)
        if not same_element(field, generators[label]):
            failures.append(f"{label}[0] differs by {difference(field, generators[label])}")
    return from_failures(failures, "4 odd zero modes")


def poisson_suite(context: VerificationContext) -> List[Check]:
    cutoff = context.config.cutoff
    alphas = [context.alpha] + [Coefficient(value) for value in context.config.sample_values()]
    checks: List[Check] = []
    for alpha in alphas:
        tag = alpha_tag(alpha)
        checks.append(Check(f"hom[poisson]@alpha={tag}", lambda a=alpha: hom_outcome(POISSON, a, cutoff)))
        checks.append(Check(f"generate[poisson]@alpha={tag}", lambda a=alpha: generation_outcome(POISSON, a, cutoff)))
    checks.append(Check(f"relations[poisson]@alpha={alpha_tag(context.alpha)}",
                        lambda: relations_outcome(POISSON, context.alpha, cutoff)))

    def jacobi_family() -> CheckOutcome:
        s1, s2 = param("sigma1"), param("sigma2")
        return from_failures(jacobi_check(build_gamma(s1, s2, -s1 - s2)), "17^3 triples")

    def jacobi_control() -> CheckOutcome:
        return expect_failure(jacobi_check(build_gamma(1, 1, 1), limit=1))

    checks.append(Check("jacobi[sigma1,sigma2,-sigma1-sigma2]", jacobi_family))
    checks.append(Check("jacobi-control[1,1,1]", jacobi_control))

    def scaling() -> CheckOutcome:
        verdict = scaling_isomorphism_check(context.alpha, 4)
        return from_failures(verdict.failures, f"{verdict.pairs_checked} pairs")

    checks.append(Check(f"scaling[k=4]@alpha={alpha_tag(context.alpha)}", scaling))
    return checks


def deformed_suite(context: VerificationContext) -> List[Check]:
    cutoff = context.config.cutoff
    alpha = context.alpha
    tag = alpha_tag(alpha)
    checks = [
        Check(f"hom[deformed]@alpha={tag}", lambda: hom_outcome(DEFORMED, alpha, cutoff)),
        Check(f"relations[deformed]@alpha={tag}", lambda: relations_outcome(DEFORMED, alpha, cutoff)),
        Check(f"generate[deformed]@alpha={tag}", lambda: generation_outcome(DEFORMED, alpha, cutoff)),
        Check(f"limit[deformed->poisson]@alpha={tag}", lambda: limit_outcome(DEFORMED, POISSON, alpha, cutoff)),
    ]
    for copy in (1, 2):
        for h_deformed in (False, True):
            name = f"S{copy}" + ("_h" if h_deformed else "")
            checks.append(Check(f"zero-modes[{name}]@alpha={tag}",
                                lambda c=copy, d=h_deformed: zero_mode_outcome(c, alpha, d)))
    return checks


def matrix_suite(context: VerificationContext) -> List[Check]:
    cutoff = context.config.cutoff
    alpha = context.alpha
    tag = alpha_tag(alpha)
    return [
        Check(f"hom[matrix]@alpha={tag}", lambda: hom_outcome(MATRIX, alpha, cutoff)),
        Check(f"relations[matrix]@alpha={tag}", lambda: relations_outcome(MATRIX, alpha, cutoff)),
        Check(f"dictionary[matrix]@alpha={tag}", lambda: from_failures(matrix_dictionary_check(alpha), "17 matrices")),
    ]


def pseudo_suite(context: VerificationContext) -> List[Check]:
    cutoff = context.config.cutoff
    alpha = context.alpha
    tag = alpha_tag(alpha)
    return [
        Check(f"hom[pseudo_h]@alpha={tag}", lambda: hom_outcome(PSEUDO_H, alpha, cutoff)),
        Check(f"hom[pseudo_limit]@alpha={tag}", lambda: hom_outcome(PSEUDO_LIMIT, alpha, cutoff)),
        Check(f"relations[pseudo_h]@alpha={tag}", lambda: relations_outcome(PSEUDO_H, alpha, cutoff)),
        Check(f"relations[pseudo_limit]@alpha={tag}", lambda: relations_outcome(PSEUDO_LIMIT, alpha, cutoff)),
        Check(f"dictionary[i_h]@alpha={tag}",
              lambda: from_failures(pseudo_dictionary_check(alpha, cutoff), "17 combinations")),
        Check(f"dictionary[i_0]@alpha={tag}",
              lambda: from_failures(pseudo_dictionary_check(alpha, cutoff, h=ZERO_H), "17 combinations")),
        Check(f"limit[pseudo_h->pseudo_limit]@alpha={tag}",
              lambda: limit_outcome(PSEUDO_H, PSEUDO_LIMIT, alpha, cutoff)),
    ]


def psl(context: VerificationContext) -> List[Check]:
    cutoff = context.config.cutoff

    def degenerate(value: int, variant: str) -> CheckOutcome:
        verdict = psl_check(value, variant, cutoff=cutoff)
        detail = (f"dim={verdict.dimension}, closes={verdict.closes}, "
                  f"center={verdict.center_dimension}, sl2 scale={verdict.sl2_scale}")
        return expect(verdict.passed, "; ".join(verdict.notes) or detail, detail)

    def control() -> CheckOutcome:
        verdict = psl_check(2, MATRIX, cutoff=cutoff)
        return expect(not verdict.closes, "span closes at alpha=2", f"dim={verdict.dimension}")

    checks = []
    for value in (1, -1):
        for variant in (MATRIX, POISSON):
            checks.append(Check(f"psl[{variant}]@alpha={value}", lambda v=value, m=variant: degenerate(v, m)))
    checks.append(Check("psl-control[matrix]@alpha=2", control))
    return checks
