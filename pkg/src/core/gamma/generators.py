#!/usr/bin/env python3
"""
Concrete generator sets of Γ_α inside P(4), P_h(4) and M(2|2, W), and the
isomorphism from Γ(2, -1-α, α-1) onto them.

Variants:
    poisson       exact symbols in P(4), Poisson bracket
    deformed      exact symbols in P_h(4), bracket (1/h)[ , ]_h
    pseudo_h      pseudodifferential symbols in P_h(4) built from i_h fields
    pseudo_limit  their h -> 0 limit in P(4), Poisson bracket
    matrix        (2|2) matrices over the Weyl algebra, supermatrix bracket
"""

import logging
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Tuple

from ..arithmetic.coefficient import Coefficient, Scalar, as_coefficient, param
from ..arithmetic.linear_algebra import SpanBasis
from ..arithmetic.term_map import TermMap
from ..contact.field_families import symbol
from ..errors import UnknownLabel, UnknownVariant
from ..symbols.psymbol import DEFAULT_CUTOFF, PSymbol, circ_h, deformed_bracket, poisson_bracket
from ..weyl.embeddings import GAMMA_LABELS, gamma_matrix
from ..weyl.supermatrix import supermatrix_bracket
from .gamma_algebra import LABELS, GammaElement

logger = logging.getLogger(__name__)

POISSON, DEFORMED, PSEUDO_H, PSEUDO_LIMIT, MATRIX = "poisson", "deformed", "pseudo_h", "pseudo_limit", "matrix"
VARIANTS: Tuple[str, ...] = (POISSON, DEFORMED, PSEUDO_H, PSEUDO_LIMIT, MATRIX)

ODD_GAMMA_LABELS: Tuple[str, ...] = ("T1", "T2", "T3", "T4", "D1", "D2", "D3", "D4")

_TAU_INVERSE = PSymbol.monomial(1, 0, -1, 0)


def _common(alpha: Coefficient) -> Dict[str, PSymbol]:
    """Generators shared by every symbol variant."""
    return {
        "E3": symbol(1, 0, 0, "x1 y2"),
        "F3": symbol(1, 0, 0, "x2 y1"),
        "H3": symbol(1, 0, 0, "x1 y1") - symbol(1, 0, 0, "x2 y2"),
        "T1": symbol(1, 1, 0, "y1"),
        "T2": symbol(1, 1, 0, "y2"),
        "D1": symbol(1, 0, 1, "x1") + symbol(alpha, -1, 0, "x1 x2 y2"),
        "D2": symbol(1, 0, 1, "x2") - symbol(alpha, -1, 0, "x1 x2 y1"),
    }


def _h2_base() -> PSymbol:
    return symbol(1, 0, 0, "x1 y1") + symbol(1, 0, 0, "x2 y2")


def poisson_generators(alpha: Coefficient) -> Dict[str, PSymbol]:
    out = _common(alpha)
    out.update({
        "E1": symbol(1, 2, 0),
        "F1": symbol(1, 0, 2) - symbol(alpha * 2, -2, 0, "x1 x2 y1 y2"),
        "H1": symbol(1, 1, 1),
        "E2": symbol(1, 0, 0, "x1 x2"),
        "F2": symbol(1, 0, 0, "y1 y2"),
        "H2": _h2_base(),
        "T3": symbol(1, 1, 0, "x1"),
        "T4": symbol(1, 1, 0, "x2"),
        "D3": symbol(1, 0, 1, "y1") + symbol(alpha, -1, 0, "x2 y1 y2"),
        "D4": symbol(1, 0, 1, "y2") - symbol(alpha, -1, 0, "x1 y1 y2"),
    })
    return out


def deformed_generators(alpha: Coefficient) -> Dict[str, PSymbol]:
    h = param("h")
    out = poisson_generators(alpha)
    out.update({
        "H1": symbol(1, 1, 1) + symbol((alpha + 1) * h / 2, 0, 0),
        "F1": symbol(1, 0, 2) - (
            symbol(2, -2, 0, "x1 x2 y1 y2") + _h2_base().scale(h).map_keys(lambda k: ((k[0] - 2, k[1], k[2]), 1))
            - symbol(h, -1, 1)
        ).scale(alpha),
        "H2": _h2_base() - symbol(h, 0, 0),
        "D3": symbol(1, 0, 1, "y1") + symbol(alpha, -1, 0, "y1 y2 x2", deformed=True),
        "D4": symbol(1, 0, 1, "y2") - symbol(alpha, -1, 0, "y1 y2 x1", deformed=True),
    })
    return out


def _tau_inverse_circ(coefficient: Scalar, t: int, word: str, cutoff: int) -> PSymbol:
    """coefficient * tau^-1 o_h t^t (Λ_h word)."""
    return circ_h(_TAU_INVERSE, symbol(coefficient, t, 0, word, deformed=True), cutoff)


def pseudo_h_generators(alpha: Coefficient, cutoff: int = DEFAULT_CUTOFF) -> Dict[str, PSymbol]:
    h = param("h")
    shift = alpha + 1
    out = _common(alpha)
    out.update({
        "E1": symbol(1, 3, 1) + _h2_base().map_keys(lambda k: ((k[0] + 2, k[1], k[2]), 1)),
        "F1": symbol(1, -1, 1)
              + (_tau_inverse_circ(-2, -3, "y1 y2 x1 x2", cutoff) + symbol(h, -2, 0)).scale(shift)
              - _h2_base().map_keys(lambda k: ((k[0] - 2, k[1], k[2]), 1)),
        "H1": symbol(1, 1, 1) + symbol(shift * h / 2, 0, 0),
        "E2": symbol(1, 1, 1, "x1 x2"),
        "F2": _tau_inverse_circ(1, -1, "y1 y2", cutoff),
        "H2": _h2_base() - symbol(h, 0, 0),
        "T3": symbol(1, 2, 1, "x1") + symbol(1, 1, 0, "x1 x2 y2"),
        "T4": symbol(1, 2, 1, "x2") - symbol(1, 1, 0, "x1 x2 y1"),
        "D3": symbol(1, -1, 0, "y1") + _tau_inverse_circ(shift, -2, "y1 y2 x2", cutoff),
        "D4": symbol(1, -1, 0, "y2") - _tau_inverse_circ(shift, -2, "y1 y2 x1", cutoff),
    })
    return out


def pseudo_limit_generators(alpha: Coefficient) -> Dict[str, PSymbol]:
    shift = alpha + 1
    out = _common(alpha)
    out.update({
        "E1": symbol(1, 3, 1) + _h2_base().map_keys(lambda k: ((k[0] + 2, k[1], k[2]), 1)),
        "F1": symbol(1, -1, 1) - symbol(shift * 2, -3, -1, "x1 x2 y1 y2")
              - _h2_base().map_keys(lambda k: ((k[0] - 2, k[1], k[2]), 1)),
        "H1": symbol(1, 1, 1),
        "E2": symbol(1, 1, 1, "x1 x2"),
        "F2": symbol(1, -1, -1, "y1 y2"),
        "H2": _h2_base(),
        "T3": symbol(1, 2, 1, "x1") + symbol(1, 1, 0, "x1 x2 y2"),
        "T4": symbol(1, 2, 1, "x2") - symbol(1, 1, 0, "x1 x2 y1"),
        # the h -> 0 limit of the pseudo_h D3, D4
        "D3": symbol(1, -1, 0, "y1") + symbol(shift, -2, -1, "y1 y2 x2"),
        "D4": symbol(1, -1, 0, "y2") - symbol(shift, -2, -1, "y1 y2 x1"),
    })
    return out


def gamma_alpha_generators(alpha: Optional[Scalar] = None, variant: str = POISSON,
                           cutoff: int = DEFAULT_CUTOFF) -> Dict[str, TermMap]:
    """The seventeen labeled generators E1 ... D4 of the chosen realization."""
    alpha = param("alpha") if alpha is None else as_coefficient(alpha)
    if variant == POISSON:
        return poisson_generators(alpha)
    if variant == DEFORMED:
        return deformed_generators(alpha)
    if variant == PSEUDO_H:
        return pseudo_h_generators(alpha, cutoff)
    if variant == PSEUDO_LIMIT:
        return pseudo_limit_generators(alpha)
    if variant == MATRIX:
        return {label: gamma_matrix(label, alpha) for label in GAMMA_LABELS}
    raise UnknownVariant(f"Unknown generator variant {variant!r}; expected one of {', '.join(VARIANTS)}")


def variant_bracket(variant: str, cutoff: int = DEFAULT_CUTOFF) -> Callable[[TermMap, TermMap], TermMap]:
    if variant in (POISSON, PSEUDO_LIMIT):
        return poisson_bracket
    if variant in (DEFORMED, PSEUDO_H):
        return lambda a, b: deformed_bracket(a, b, cutoff)
    if variant == MATRIX:
        return supermatrix_bracket
    raise UnknownVariant(f"Unknown generator variant {variant!r}")


# ----------------------------------------------------------------------
# linear maps out of Γ
# ----------------------------------------------------------------------

class LinearMap:
    """Assignment basis label -> image, extended linearly."""

    def __init__(self, images: Mapping[str, TermMap], name: str = "map"):
        self.name = name
        self.images: Dict[str, TermMap] = dict(images)
        if not self.images:
            raise ValueError("A linear map needs at least one image")
        sample = next(iter(self.images.values()))
        self._zero = sample._derive({})
        if isinstance(sample, PSymbol):
            self._zero.truncation = None

    def __getitem__(self, label: str) -> TermMap:
        try:
            return self.images[label]
        except KeyError:
            raise UnknownLabel(f"{self.name} has no image for {label}") from None

    def labels(self) -> List[str]:
        return list(self.images)

    def zero(self) -> TermMap:
        return self._zero

    def apply(self, element: GammaElement) -> TermMap:
        result = self._zero
        for label, value in element.items():
            result = result + self[label].scale(value)
        return result

    def __call__(self, element: GammaElement) -> TermMap:
        return self.apply(element)

    def with_image(self, label: str, image: TermMap) -> "LinearMap":
        images = dict(self.images)
        images[label] = image
        return LinearMap(images, f"{self.name}*")

    def rank(self) -> int:
        basis = SpanBasis()
        for image in self.images.values():
            basis.add(image)
        return basis.dimension

    def is_injective(self) -> bool:
        return self.rank() == len(self.images)


# Γ basis label -> (generator label, factor in units of 1 or ω)
PHI_ASSIGNMENT: Dict[str, Tuple[str, int, bool]] = {
    "P1(e1,e1)": ("E1", -1, False),
    "P1(e2,e2)": ("F1", -1, False),
    "P1(e1,e2)": ("H1", -1, False),
    "P2(f1,f1)": ("F2", -2, False),
    "P2(f2,f2)": ("E2", -2, False),
    "P2(f1,f2)": ("H2", 1, False),
    "P3(h1,h1)": ("F3", -2, False),
    "P3(h2,h2)": ("E3", 2, False),
    "P3(h1,h2)": ("H3", 1, False),
    "e1f1h1": ("T1", 1, True),
    "e1f1h2": ("T2", 1, True),
    "e1f2h1": ("T4", -1, True),
    "e1f2h2": ("T3", 1, True),
    "e2f1h1": ("D3", 1, True),
    "e2f1h2": ("D4", 1, True),
    "e2f2h1": ("D2", -1, True),
    "e2f2h2": ("D1", 1, True),
}


def phi_map(alpha: Optional[Scalar] = None, variant: str = POISSON,
            generators: Optional[Mapping[str, TermMap]] = None, cutoff: int = DEFAULT_CUTOFF) -> LinearMap:
    """φ: Γ(2, -1-α, α-1) -> Γ_α with odd images scaled by ω = sqrt(2) i."""
    generators = generators or gamma_alpha_generators(alpha, variant, cutoff)
    omega = Coefficient.omega()
    images = {}
    for label in LABELS:
        target, factor, odd = PHI_ASSIGNMENT[label]
        scale = omega * factor if odd else Coefficient(factor)
        images[label] = generators[target].scale(scale)
    return LinearMap(images, f"phi[{variant}]")


def scaled_identity_map(target_algebra, odd_scale: Scalar, even_scale: Scalar = 1) -> LinearMap:
    """even -> even_scale * even, odd -> odd_scale * odd inside ``target_algebra``."""
    images = {}
    for label in LABELS:
        factor = odd_scale if target_algebra.parity(label) else even_scale
        images[label] = GammaElement.basis(label, factor)
    return LinearMap(images, "scaling")


def odd_generators(generators: Mapping[str, TermMap], labels: Iterable[str] = ODD_GAMMA_LABELS) -> List[TermMap]:
    return [generators[label] for label in labels]
