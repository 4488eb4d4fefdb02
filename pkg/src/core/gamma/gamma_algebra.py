#!/usr/bin/env python3
"""
The seventeen-dimensional superalgebras Γ(σ1, σ2, σ3).

The even part is sp(ψ1) ⊕ sp(ψ2) ⊕ sp(ψ3) spanned by P_i(u, v) for basis
vectors of the 2-dimensional V_i; the odd part is V1 ⊗ V2 ⊗ V3. Every ψ_i
is the standard form ψ(u1, u2) = 1.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from ..arithmetic.coefficient import Coefficient, Scalar, as_coefficient
from ..arithmetic.formatting import format_linear
from ..arithmetic.term_map import TermMap, accumulate
from ..errors import MixedParity, UnknownLabel
from ..grassmann.lambda_algebra import EVEN, MIXED, ODD

logger = logging.getLogger(__name__)

VECTOR_NAMES = ("e", "f", "h")

# (factor i, a, b) with a <= b
EvenKey = Tuple[int, int, int]
OddKey = Tuple[int, int, int]
Vector = Dict[int, Coefficient]


def psi(a: int, b: int) -> int:
    """ψ(u_a, u_b) on a 2-dimensional space with ψ(u1, u2) = 1."""
    if a == b:
        return 0
    return 1 if (a, b) == (1, 2) else -1


def even_label(i: int, a: int, b: int) -> str:
    a, b = min(a, b), max(a, b)
    v = VECTOR_NAMES[i - 1]
    return f"P{i}({v}{a},{v}{b})"


def odd_label(x: OddKey) -> str:
    return "".join(f"{VECTOR_NAMES[i]}{x[i]}" for i in range(3))


EVEN_KEYS: List[EvenKey] = [(i, a, b) for i in (1, 2, 3) for a, b in ((1, 1), (2, 2), (1, 2))]
ODD_KEYS: List[OddKey] = list(itertools.product((1, 2), repeat=3))
EVEN_LABELS: List[str] = [even_label(*k) for k in EVEN_KEYS]
ODD_LABELS: List[str] = [odd_label(k) for k in ODD_KEYS]
LABELS: List[str] = EVEN_LABELS + ODD_LABELS

_EVEN_BY_LABEL = dict(zip(EVEN_LABELS, EVEN_KEYS))
_ODD_BY_LABEL = dict(zip(ODD_LABELS, ODD_KEYS))


def label_parity(label: str) -> int:
    if label in _EVEN_BY_LABEL:
        return 0
    if label in _ODD_BY_LABEL:
        return 1
    raise UnknownLabel(f"Unknown Γ basis label: {label}")


class GammaElement(TermMap):
    """Linear combination of the seventeen basis labels."""

    @classmethod
    def basis(cls, label: str, coefficient: Scalar = 1) -> "GammaElement":
        label_parity(label)
        return cls({label: as_coefficient(coefficient)})

    def parity(self) -> str:
        parities = {label_parity(label) for label in self._terms}
        if not parities:
            return EVEN
        if len(parities) > 1:
            return MIXED
        return ODD if parities.pop() else EVEN

    def parity_bit(self) -> int:
        parity = self.parity()
        if parity == MIXED:
            raise MixedParity(f"{self} has mixed parity")
        return 1 if parity == ODD else 0

    def terms(self):
        order = {label: i for i, label in enumerate(LABELS)}
        return sorted(self._terms.items(), key=lambda item: order[item[0]])

    def __str__(self) -> str:
        return format_linear((value, [label]) for label, value in self.terms())

    def __repr__(self) -> str:
        return f"GammaElement({self})"


def _p_apply(a: int, b: int, c: int) -> Vector:
    """P(u_a, u_b) u_c = ψ(u_b, u_c) u_a - ψ(u_c, u_a) u_b."""
    out: Vector = {}
    first = psi(b, c)
    if first:
        accumulate(out, a, Coefficient(first))
    second = psi(c, a)
    if second:
        accumulate(out, b, Coefficient(-second))
    return out


def _p_of_vectors(i: int, x: Vector, y: Vector) -> Dict[str, Coefficient]:
    """P_i(x, y) expanded bilinearly in the symmetric basis."""
    out: Dict[str, Coefficient] = {}
    for a, ca in x.items():
        for b, cb in y.items():
            accumulate(out, even_label(i, a, b), ca * cb)
    return out


def _unit(a: int) -> Vector:
    return {a: Coefficient(1)}


@dataclass(frozen=True)
class Sigmas:
    sigma1: Coefficient
    sigma2: Coefficient
    sigma3: Coefficient

    def __iter__(self):
        return iter((self.sigma1, self.sigma2, self.sigma3))

    def __str__(self) -> str:
        return f"Γ({self.sigma1}, {self.sigma2}, {self.sigma3})"


class GammaAlgebra:
    """Γ(σ1, σ2, σ3) with a lazily filled structure-constant table."""

    def __init__(self, sigma1: Scalar, sigma2: Scalar, sigma3: Scalar):
        self.sigmas = Sigmas(as_coefficient(sigma1), as_coefficient(sigma2), as_coefficient(sigma3))
        self._table: Dict[Tuple[str, str], GammaElement] = {}

    @property
    def name(self) -> str:
        return str(self.sigmas)

    @property
    def labels(self) -> List[str]:
        return list(LABELS)

    @property
    def dimension(self) -> int:
        return len(LABELS)

    def parity(self, label: str) -> int:
        return label_parity(label)

    def basis(self, label: str) -> GammaElement:
        return GammaElement.basis(label)

    # -- structure constants -------------------------------------------

    def _even_even(self, x: EvenKey, y: EvenKey) -> Dict[str, Coefficient]:
        i, a, b = x
        j, c, d = y
        if i != j:
            return {}
        out: Dict[str, Coefficient] = {}
        # [P(a,b), P(c,d)] = P(P(a,b)c, d) + P(c, P(a,b)d)
        for label, value in _p_of_vectors(i, _p_apply(a, b, c), _unit(d)).items():
            accumulate(out, label, value)
        for label, value in _p_of_vectors(i, _unit(c), _p_apply(a, b, d)).items():
            accumulate(out, label, value)
        return out

    def _even_odd(self, x: EvenKey, v: OddKey) -> Dict[str, Coefficient]:
        i, a, b = x
        out: Dict[str, Coefficient] = {}
        for index, value in _p_apply(a, b, v[i - 1]).items():
            image = list(v)
            image[i - 1] = index
            accumulate(out, odd_label(tuple(image)), value)
        return out

    def _odd_odd(self, x: OddKey, y: OddKey) -> Dict[str, Coefficient]:
        out: Dict[str, Coefficient] = {}
        psis = [psi(x[k], y[k]) for k in range(3)]
        for i, sigma in enumerate(self.sigmas):
            others = [psis[k] for k in range(3) if k != i]
            factor = others[0] * others[1]
            if not factor or sigma.is_zero():
                continue
            for label, value in _p_of_vectors(i + 1, _unit(x[i]), _unit(y[i])).items():
                accumulate(out, label, value * sigma * factor)
        return out

    def bracket_labels(self, a: str, b: str) -> GammaElement:
        key = (a, b)
        cached = self._table.get(key)
        if cached is not None:
            return cached
        pa, pb = label_parity(a), label_parity(b)
        if not pa and not pb:
            terms = self._even_even(_EVEN_BY_LABEL[a], _EVEN_BY_LABEL[b])
        elif not pa:
            terms = self._even_odd(_EVEN_BY_LABEL[a], _ODD_BY_LABEL[b])
        elif not pb:
            terms = {k: -v for k, v in self._even_odd(_EVEN_BY_LABEL[b], _ODD_BY_LABEL[a]).items()}
        else:
            terms = self._odd_odd(_ODD_BY_LABEL[a], _ODD_BY_LABEL[b])
        result = GammaElement(terms)
        self._table[key] = result
        return result

    def bracket(self, x: GammaElement, y: GammaElement) -> GammaElement:
        """Bilinear extension of the basis table."""
        terms: Dict[str, Coefficient] = {}
        for a, ca in x.items():
            for b, cb in y.items():
                for label, value in self.bracket_labels(a, b).items():
                    accumulate(terms, label, ca * cb * value)
        return GammaElement(terms)

    def structure_table(self) -> Dict[Tuple[str, str], GammaElement]:
        """Every non-zero [a, b] over ordered basis pairs."""
        table = {}
        for a in LABELS:
            for b in LABELS:
                value = self.bracket_labels(a, b)
                if not value.is_zero():
                    table[(a, b)] = value
        return table

    def __repr__(self) -> str:
        return f"GammaAlgebra{self.sigmas}"


def build_gamma(sigma1: Scalar, sigma2: Scalar, sigma3: Scalar) -> GammaAlgebra:
    return GammaAlgebra(sigma1, sigma2, sigma3)


def gamma_for_alpha(alpha: Scalar) -> GammaAlgebra:
    """Γ(2, -1-α, α-1)."""
    alpha = as_coefficient(alpha)
    return GammaAlgebra(2, -alpha - 1, alpha - 1)


@dataclass
class JacobiViolation:
    a: str
    b: str
    c: str
    residual: GammaElement

    def __str__(self) -> str:
        return f"({self.a}, {self.b}, {self.c}): {self.residual}"


def jacobi_check(algebra: GammaAlgebra, limit: Optional[int] = None) -> List[JacobiViolation]:
    """
    Super Jacobi identity [a,[b,c]] = [[a,b],c] + (-1)^(p(a)p(b)) [b,[a,c]]
    on every basis triple.
    """
    violations: List[JacobiViolation] = []
    for a in LABELS:
        x = algebra.basis(a)
        for b in LABELS:
            y = algebra.basis(b)
            sign = -1 if label_parity(a) and label_parity(b) else 1
            xy = algebra.bracket(x, y)
            for c in LABELS:
                z = algebra.basis(c)
                lhs = algebra.bracket(x, algebra.bracket(y, z))
                rhs = algebra.bracket(xy, z) + algebra.bracket(y, algebra.bracket(x, z)).scale(sign)
                residual = lhs - rhs
                if not residual.is_zero():
                    violations.append(JacobiViolation(a, b, c, residual))
                    if limit is not None and len(violations) >= limit:
                        return violations
    logger.info(f"Jacobi check on {algebra.name}: {len(violations)} violations")
    return violations
