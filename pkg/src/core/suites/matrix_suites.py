#!/usr/bin/env python3
"""
Suites for the (2|2) Weyl-matrix embeddings of K'(4)^ and the module V^mu.
"""

import logging
from typing import List

from ..arithmetic.linear_algebra import SpanBasis
from ..context import VerificationContext
from ..contact.field_families import K4_LABELS
from ..errors import ShapeViolation
from ..weyl.embeddings import (
    central_element,
    central_embedding_check,
    embed_I,
    embed_J,
    grading_component,
    same_image_check,
)
from ..weyl.representation import consistency_failures, formal_mu, representation_failures
from ..weyl.supermatrix import WeylSuperMatrix
from .checks import Check, CheckOutcome, expect, from_failures

logger = logging.getLogger(__name__)

REPRESENTATION_VECTOR_RANGE = 2


def _modes(window: int) -> range:
    return range(-window, window + 1)


def degree_outcome(window: int) -> CheckOutcome:
    """Every entry of I(a[n]) is homogeneous of t-degree n."""
    failures = []
    for label in K4_LABELS:
        for n in _modes(window):
            degrees = sorted({key[2] for key in embed_I(label, n).keys()})
            if degrees != [n]:
                failures.append(f"I({label}[{n}]) has t-degrees {degrees}")
    return from_failures(failures, f"{len(K4_LABELS)} labels")


def degree_zero_span_outcome() -> CheckOutcome:
    span = SpanBasis()
    for label in K4_LABELS:
        span.add(embed_I(label, 0), label=label)
    return expect(span.dimension == len(K4_LABELS), f"dimension {span.dimension}, expected {len(K4_LABELS)}",
                  f"dimension {span.dimension}")


def shape_outcome() -> CheckOutcome:
    failures = []
    for label in K4_LABELS:
        try:
            verdict = grading_component(embed_I(label, 0))
        except ShapeViolation as e:
            failures.append(f"I({label}[0]): {e}")
            continue
        if not verdict.conforms:
            failures.append(f"I({label}[0]) does not conform")
    return from_failures(failures, "degree-zero block shape")


def matrix_embed_i(context: VerificationContext) -> List[Check]:
    window = context.config.mode_range
    return [
        Check(f"embedding[I]@modes<={window}",
              lambda: from_failures(central_embedding_check(window, embed_I), "central extension")),
        Check("central[I(G3[0])=1]",
              lambda: expect(central_element() == WeylSuperMatrix.identity(), f"I(G3[0]) = {central_element()}")),
        Check("degrees[I]", lambda: degree_outcome(window)),
        Check("degree-zero-span[I]", degree_zero_span_outcome),
        Check("degree-zero-shape[I]", shape_outcome),
    ]


def dictionary_ij(context: VerificationContext) -> List[Check]:
    window = context.config.mode_range
    return [
        Check(f"embedding[J]@modes<={window}",
              lambda: from_failures(central_embedding_check(window, embed_J), "central extension")),
        Check(f"same-image[I,J]@modes<={window}", lambda: from_failures(same_image_check(window))),
    ]


def rep_consistency(context: VerificationContext) -> List[Check]:
    window = context.config.mode_range
    mu = context.mu
    tag = "symbolic" if mu.depends_on("mu") else str(mu)
    return [
        Check("rep-vs-matrix@mu=0", lambda: from_failures(consistency_failures(window, 4, mu=0))),
        Check("rep-vs-matrix@mu=symbolic", lambda: from_failures(consistency_failures(window, 4, mu=formal_mu()))),
        Check(f"representation@mu={tag}",
              lambda: from_failures(representation_failures(min(window, 2), REPRESENTATION_VECTOR_RANGE, mu))),
    ]
