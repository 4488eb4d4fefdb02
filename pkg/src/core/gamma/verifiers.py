#!/usr/bin/env python3
"""
Checks on realizations of Γ(2, -1-α, α-1): homomorphism property,
generation from the odd part, the h -> 0 limit, the commutation-relation
ledger, the psl(2|2) degenerations and the scaling isomorphism.
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple

from ..arithmetic.coefficient import Coefficient, Scalar, as_coefficient, param
from ..arithmetic.linear_algebra import SpanBasis
from ..arithmetic.term_map import TermMap
from ..contact.field_families import FORMAL_H, ZERO_H, k4_basis
from ..errors import NoConvergence
from ..symbols.psymbol import DEFAULT_CUTOFF, PSymbol, window_difference, window_equal
from ..weyl.embeddings import GAMMA_LABELS, gamma_dictionary, gamma_matrix, gamma_matrix_from_dictionary
from .gamma_algebra import LABELS, GammaAlgebra, GammaElement, build_gamma, gamma_for_alpha
from .generators import (
    MATRIX,
    LinearMap,
    gamma_alpha_generators,
    pseudo_h_generators,
    pseudo_limit_generators,
    scaled_identity_map,
    variant_bracket,
)

logger = logging.getLogger(__name__)

Bracket = Callable[[TermMap, TermMap], TermMap]


def same_element(x: TermMap, y: TermMap) -> bool:
    """Exact equality, or window equality when a symbol is truncated."""
    if isinstance(x, PSymbol) and isinstance(y, PSymbol):
        return window_equal(x, y)
    return x == y


def difference(x: TermMap, y: TermMap) -> TermMap:
    if isinstance(x, PSymbol) and isinstance(y, PSymbol):
        return window_difference(x, y)
    return x - y


# ----------------------------------------------------------------------
# homomorphism check
# ----------------------------------------------------------------------

@dataclass
class PairFailure:
    a: str
    b: str
    residual: TermMap

    def __str__(self) -> str:
        return f"[{self.a}, {self.b}]: residual {self.residual}"


@dataclass
class HomVerdict:
    """Outcome of comparing map([x, y]) with [map(x), map(y)] on all basis pairs."""

    name: str
    pairs_checked: int = 0
    injective: bool = False
    failures: List[PairFailure] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.injective and not self.failures


def hom_check(mapping: LinearMap, source: GammaAlgebra, target_bracket: Bracket,
              labels: Optional[Sequence[str]] = None) -> HomVerdict:
    """
    Verify mapping([a, b]) = [mapping(a), mapping(b)] for every ordered pair of
    basis labels, and that the images are linearly independent.
    """
    labels = list(labels or LABELS)
    verdict = HomVerdict(name=f"{mapping.name} on {source.name}")
    verdict.injective = mapping.is_injective()
    for a in labels:
        for b in labels:
            verdict.pairs_checked += 1
            expected = mapping.apply(source.bracket_labels(a, b))
            actual = target_bracket(mapping[a], mapping[b])
            if not same_element(actual, expected):
                verdict.failures.append(PairFailure(a, b, difference(actual, expected)))
    logger.info(f"hom_check {verdict.name}: {verdict.pairs_checked} pairs, {len(verdict.failures)} failures")
    return verdict


# ----------------------------------------------------------------------
# generation from the odd part
# ----------------------------------------------------------------------

@dataclass
class GeneratedAlgebra:
    elements: List[TermMap]
    rounds: int

    @property
    def dimension(self) -> int:
        return len(self.elements)


def generate_from_odd(odd_generators: Sequence[TermMap], bracket: Bracket, max_rounds: int = 6) -> GeneratedAlgebra:
    """
    Close the span of the generators under the bracket.

    Raises:
        NoConvergence: the span was still growing after ``max_rounds`` rounds.
    """
    span = SpanBasis()
    elements: List[TermMap] = []
    for generator in odd_generators:
        if span.add(generator):
            elements.append(generator)
    frontier = list(elements)
    for round_number in range(1, max_rounds + 1):
        new: List[TermMap] = []
        for x in list(elements):
            for y in frontier:
                z = bracket(x, y)
                if not z.is_zero() and span.add(z):
                    new.append(z)
                    elements.append(z)
        logger.debug(f"round {round_number}: {len(new)} new elements, dimension {len(elements)}")
        if not new:
            return GeneratedAlgebra(elements, round_number)
        frontier = new
    raise NoConvergence(f"Span still growing after {max_rounds} rounds (dimension {len(elements)})")


# ----------------------------------------------------------------------
# h -> 0 limit
# ----------------------------------------------------------------------

@dataclass
class LimitVerdict:
    matched: List[str] = field(default_factory=list)
    windowed: List[str] = field(default_factory=list)
    failures: Dict[str, TermMap] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures


def contraction_limit_check(deformed: Mapping[str, PSymbol], limit: Mapping[str, PSymbol]) -> LimitVerdict:
    """Each deformed generator at h = 0 equals the undeformed one (on the exact window)."""
    verdict = LimitVerdict()
    for label, image in deformed.items():
        specialized = image.at_h_zero()
        target = limit[label]
        if not window_equal(specialized, target):
            verdict.failures[label] = window_difference(specialized, target)
        elif specialized.is_exact and target.is_exact:
            verdict.matched.append(label)
        else:
            verdict.windowed.append(label)
    return verdict


# ----------------------------------------------------------------------
# commutation-relation ledger
# ----------------------------------------------------------------------

def relation_ledger(alpha: Coefficient) -> List[Tuple[str, str, List[Tuple[str, Coefficient]]]]:
    shift = alpha + 1
    one = Coefficient(1)
    return [
        ("T1", "T3", [("E1", one)]),
        ("T1", "D4", [("F2", -shift)]),
        ("T2", "T4", [("E1", one)]),
        ("T2", "D3", [("F2", shift)]),
        ("D1", "T4", [("E2", shift)]),
        ("D1", "D3", [("F1", one)]),
        ("D2", "T3", [("E2", -shift)]),
        ("D2", "D4", [("F1", one)]),
    ]


def relation_check(generators: Mapping[str, TermMap], bracket: Bracket,
                   alpha: Optional[Scalar] = None) -> List[str]:
    """Failures of the eight odd-odd relations; empty when all hold."""
    alpha = param("alpha") if alpha is None else as_coefficient(alpha)
    failures = []
    for a, b, combination in relation_ledger(alpha):
        actual = bracket(generators[a], generators[b])
        expected = None
        for label, value in combination:
            term = generators[label].scale(value)
            expected = term if expected is None else expected + term
        if not same_element(actual, expected):
            failures.append(f"[{a}, {b}] = {actual}, expected {expected}")
    return failures


# ----------------------------------------------------------------------
# psl(2|2) degenerations
# ----------------------------------------------------------------------

PSL_TRIPLES = {1: (1, 2), -1: (1, 3)}


@dataclass
class PslVerdict:
    alpha: Coefficient
    triples: Tuple[int, int]
    dimension: int = 0
    closes: bool = False
    center_dimension: Optional[int] = None
    quotient_is_sl2: bool = False
    sl2_scale: Optional[Coefficient] = None
    notes: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.dimension == 14 and self.closes and self.center_dimension == 0 and self.quotient_is_sl2


def _triple_labels(i: int) -> List[str]:
    return [f"E{i}", f"F{i}", f"H{i}"]


def psl_check(alpha_value: Scalar, variant: str = MATRIX, triples: Optional[Tuple[int, int]] = None,
              cutoff: int = DEFAULT_CUTOFF) -> PslVerdict:
    """
    Span of two sp(2) triples with all T, D: dimension 14, closed, centerless,
    with the remaining triple spanning sl(2) modulo it.
    """
    alpha = as_coefficient(alpha_value)
    key = alpha.to_fraction() if alpha.is_constant() else None
    triples = triples or PSL_TRIPLES.get(key, (1, 2))
    generators = gamma_alpha_generators(alpha, variant, cutoff)
    bracket = variant_bracket(variant, cutoff)
    verdict = PslVerdict(alpha=alpha, triples=triples)

    labels = _triple_labels(triples[0]) + _triple_labels(triples[1])
    labels += ["T1", "T2", "T3", "T4", "D1", "D2", "D3", "D4"]
    elements = [generators[label] for label in labels]
    span = SpanBasis()
    for label, element in zip(labels, elements):
        span.add(element, label=label)
    verdict.dimension = span.dimension

    verdict.closes = True
    products: Dict[Tuple[str, str], TermMap] = {}
    for a, x in zip(labels, elements):
        for b, y in zip(labels, elements):
            z = bracket(x, y)
            products[(a, b)] = z
            if not span.contains(z):
                verdict.closes = False
                verdict.notes.append(f"[{a}, {b}] leaves the span")
    if not verdict.closes:
        return verdict

    ad_rows = SpanBasis()
    for a in labels:
        row = {}
        for b in labels:
            for k, v in products[(a, b)].items():
                row[(b, k)] = v
        ad_rows.add(row)
    verdict.center_dimension = len(labels) - ad_rows.dimension

    remaining = ({1, 2, 3} - set(triples)).pop()
    e, f, h = (generators[label] for label in _triple_labels(remaining))
    he_ok = span.contains(difference(bracket(h, e), e.scale(2)))
    hf_ok = span.contains(difference(bracket(h, f), f.scale(-2)))
    with_h = SpanBasis()
    for label, element in zip(labels, elements):
        with_h.add(element, label=label)
    with_h.add(h, label="H")
    coordinates = with_h.decompose(bracket(e, f))
    scale = coordinates.get("H") if coordinates is not None else None
    verdict.sl2_scale = scale
    verdict.quotient_is_sl2 = he_ok and hf_ok and scale is not None and not scale.is_zero()
    if not verdict.quotient_is_sl2:
        verdict.notes.append("remaining triple does not satisfy sl(2) relations modulo the span")
    return verdict


# ----------------------------------------------------------------------
# cross-checks between realizations
# ----------------------------------------------------------------------

def scaling_isomorphism_check(alpha: Optional[Scalar] = None, k: int = 4) -> HomVerdict:
    """
    Γ(kσ) -> Γ(σ), even -> even, odd -> sqrt(k) odd, for perfect squares k.
    """
    root = int(round(k ** 0.5))
    if root * root != k:
        raise ValueError(f"Scaling factor must be a perfect square, got {k}")
    alpha = param("alpha") if alpha is None else as_coefficient(alpha)
    target = gamma_for_alpha(alpha)
    source = build_gamma(*(sigma * k for sigma in target.sigmas))
    mapping = scaled_identity_map(target, odd_scale=root)
    return hom_check(mapping, source, target.bracket)


def matrix_dictionary_check(alpha: Optional[Scalar] = None) -> List[str]:
    """Explicit Γ matrices against their I-combinations."""
    failures = []
    for label in GAMMA_LABELS:
        explicit = gamma_matrix(label, alpha)
        combined = gamma_matrix_from_dictionary(label, alpha)
        if explicit != combined:
            failures.append(f"{label}: explicit and I-combination differ by\n{explicit - combined}")
    return failures


def pseudo_dictionary_check(alpha: Optional[Scalar] = None, cutoff: int = DEFAULT_CUTOFF,
                            h: str = FORMAL_H) -> List[str]:
    """
    pseudo_h generators against the same combinations of i_h fields (G3[0] = h),
    or with ``h="zero"`` the pseudo_limit generators against i_0 fields (G3[0] = 0).
    """
    alpha = param("alpha") if alpha is None else as_coefficient(alpha)
    if h == ZERO_H:
        generators = pseudo_limit_generators(alpha)
    else:
        generators = pseudo_h_generators(alpha, cutoff)
    failures = []
    for label, combination in gamma_dictionary(alpha).items():
        combined = PSymbol.zero()
        for (source, n), value in combination:
            if h == ZERO_H and source == "G3" and n == 0:
                continue
            combined = combined + k4_basis(source, n, h, cutoff).scale(value)
        if not window_equal(generators[label], combined):
            failures.append(f"{label}: differs by {window_difference(generators[label], combined)}")
    return failures
