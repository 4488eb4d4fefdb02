#!/usr/bin/env python3
"""
Pseudodifferential symbols on S^{1|N}: the Poisson superalgebra P(2N) and
its deformation P_h(2N).

A PSymbol is a finite sum of terms c * t^a * tau^b * (odd monomial) keyed by
(a, b, mask). Products that would produce an infinite tail of negative tau
powers are cut at a floor and carry ``truncation``: the stored terms are then
exact for every tau exponent >= floor and nothing is claimed below it.
"""

import logging
from dataclasses import dataclass, field
from math import factorial
from typing import Dict, Iterable, List, Optional, Tuple

from ..arithmetic.coefficient import Coefficient, Scalar, as_coefficient, param
from ..arithmetic.formatting import format_linear, power
from ..arithmetic.term_map import TermMap, accumulate
from ..errors import MixedParity, TruncatedOperand
from ..grassmann.lambda_algebra import (
    EVEN,
    MIXED,
    ODD,
    LambdaElement,
    OddSpace,
    bits,
    deformed_monomial_mul,
    h_power,
    left_derivative_sign,
    mask_parity,
    monomial_mul,
)

logger = logging.getLogger(__name__)

DEFAULT_CUTOFF = -12

Key = Tuple[int, int, int]


def falling_factorial(value: int, n: int) -> int:
    result = 1
    for k in range(n):
        result *= value - k
    return result


def _max_floor(*floors: Optional[int]) -> Optional[int]:
    present = [f for f in floors if f is not None]
    return max(present) if present else None


class PSymbol(TermMap):
    """Element of P(2N) / P_h(2N) with an optional truncation floor."""

    def __init__(self, terms=None, space: Optional[OddSpace] = None, truncation: Optional[int] = None):
        super().__init__(terms)
        self.space = space or OddSpace(2)
        self.truncation = truncation
        if truncation is not None:
            self._terms = {k: v for k, v in self._terms.items() if k[1] >= truncation}

    # -- construction --------------------------------------------------

    @classmethod
    def monomial(cls, coefficient: Scalar = 1, t: int = 0, tau: int = 0, mask: int = 0,
                 space: Optional[OddSpace] = None) -> "PSymbol":
        return cls({(t, tau, mask): as_coefficient(coefficient)}, space)

    @classmethod
    def from_lambda(cls, element: LambdaElement, t: int = 0, tau: int = 0) -> "PSymbol":
        """t^t * tau^tau tensored with a Grassmann element."""
        return cls({(t, tau, mask): value for mask, value in element.items()}, element.space)

    @classmethod
    def zero(cls, space: Optional[OddSpace] = None) -> "PSymbol":
        return cls({}, space)

    def _with_floor(self, terms: Dict[Key, Coefficient], floor: Optional[int]) -> "PSymbol":
        if floor is not None:
            terms = {k: v for k, v in terms.items() if k[1] >= floor}
        result = self._derive(terms)
        result.truncation = floor
        return result

    # -- properties ----------------------------------------------------

    @property
    def is_exact(self) -> bool:
        return self.truncation is None

    def parity(self) -> str:
        parities = {mask_parity(key[2]) for key in self._terms}
        if not parities:
            return EVEN
        if len(parities) > 1:
            return MIXED
        return ODD if parities.pop() else EVEN

    def parity_bit(self) -> int:
        parity = self.parity()
        if parity == MIXED:
            raise MixedParity(f"Symbol {self} has mixed parity")
        return 1 if parity == ODD else 0

    def max_tau(self) -> int:
        return max((key[1] for key in self._terms), default=0)

    def min_tau(self) -> int:
        return min((key[1] for key in self._terms), default=0)

    def t_degrees(self) -> List[int]:
        return sorted({key[0] for key in self._terms})

    # -- linear structure with floors ----------------------------------

    def __add__(self, other):
        if not isinstance(other, PSymbol):
            return NotImplemented
        terms = dict(self._terms)
        for key, value in other._terms.items():
            accumulate(terms, key, value)
        return self._with_floor(terms, _max_floor(self.truncation, other.truncation))

    def __sub__(self, other):
        if not isinstance(other, PSymbol):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, PSymbol):
            return supercommutative_mul(self, other)
        if isinstance(other, (int, Coefficient)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Coefficient)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, PSymbol):
            return NotImplemented
        return self._terms == other._terms and self.truncation == other.truncation

    def __hash__(self) -> int:
        return hash((frozenset(self._terms.items()), self.truncation))

    def swap_odd(self) -> "PSymbol":
        """Interchange x_i with y_i (supercommutative reordering)."""
        def rekey(key):
            sign, mask = self.space.swap_mask(key[2])
            return (key[0], key[1], mask), sign
        return self.map_keys(rekey)

    def at_h_zero(self) -> "PSymbol":
        return self.evaluate({"h": 0})

    # -- derivatives ---------------------------------------------------

    def d_t(self) -> "PSymbol":
        return self.map_keys(lambda k: ((k[0] - 1, k[1], k[2]), k[0]) if k[0] else None)

    def d_tau(self) -> "PSymbol":
        result = self.map_keys(lambda k: ((k[0], k[1] - 1, k[2]), k[1]) if k[1] else None)
        if self.truncation is not None:
            result.truncation = self.truncation - 1
        return result

    def d_odd(self, bit: int) -> "PSymbol":
        flag = 1 << bit

        def rekey(key):
            if not key[2] & flag:
                return None
            return (key[0], key[1], key[2] ^ flag), left_derivative_sign(bit, key[2])

        return self.map_keys(rekey)

    # -- printing ------------------------------------------------------

    def _factors(self, key: Key) -> List[str]:
        t, tau, mask = key
        factors = []
        if t:
            factors.append(power("t", t))
        if tau:
            factors.append(power("tau", tau))
        factors.extend(self.space.monomial_names(mask))
        return factors

    def __str__(self) -> str:
        text = format_linear((value, self._factors(key)) for key, value in self.terms())
        if self.truncation is not None:
            text += f" + O(tau^{self.truncation - 1})"
        return text

    def __repr__(self) -> str:
        return f"PSymbol({self})"


# ----------------------------------------------------------------------
# products and brackets
# ----------------------------------------------------------------------

def supercommutative_mul(a: PSymbol, b: PSymbol) -> PSymbol:
    """The (h = 0) product of P(2N)."""
    terms: Dict[Key, Coefficient] = {}
    for (t1, s1, m1), c1 in a.items():
        for (t2, s2, m2), c2 in b.items():
            product = monomial_mul(m1, m2)
            if product is None:
                continue
            sign, mask = product
            value = c1 * c2
            accumulate(terms, (t1 + t2, s1 + s2, mask), -value if sign < 0 else value)
    floor = _max_floor(
        None if a.truncation is None else a.truncation + b.max_tau(),
        None if b.truncation is None else b.truncation + a.max_tau(),
    )
    return a._with_floor(terms, floor)


def _require_homogeneous(*symbols: PSymbol) -> List[int]:
    return [s.parity_bit() for s in symbols]


def poisson_bracket(a: PSymbol, b: PSymbol) -> PSymbol:
    """
    {A, B} = d_tau A d_t B - d_t A d_tau B
             + (-1)^(p(A)+1) sum_i (d_xi_i A d_eta_i B + d_eta_i A d_xi_i B)

    Raises TruncatedOperand for truncated input and MixedParity for mixed input.
    """
    if not (a.is_exact and b.is_exact):
        raise TruncatedOperand("Poisson bracket needs exact operands")
    p_a, _ = _require_homogeneous(a, b)
    n_pairs = a.space.n_pairs
    odd_sign = 1 if p_a else -1
    terms: Dict[Key, Coefficient] = {}
    for (t1, s1, m1), c1 in a.items():
        for (t2, s2, m2), c2 in b.items():
            value = c1 * c2
            even_factor = s1 * t2 - t1 * s2
            if even_factor:
                product = monomial_mul(m1, m2)
                if product is not None:
                    sign, mask = product
                    accumulate(terms, (t1 + t2 - 1, s1 + s2 - 1, mask), value * (sign * even_factor))
            for i in range(n_pairs):
                for first, second in ((i, i + n_pairs), (i + n_pairs, i)):
                    if not (m1 >> first) & 1 or not (m2 >> second) & 1:
                        continue
                    left = m1 ^ (1 << first)
                    right = m2 ^ (1 << second)
                    product = monomial_mul(left, right)
                    if product is None:
                        continue
                    sign, mask = product
                    sign *= left_derivative_sign(first, m1) * left_derivative_sign(second, m2) * odd_sign
                    accumulate(terms, (t1 + t2, s1 + s2, mask), value * sign)
    return a._with_floor(terms, None)


def circ_h(a: PSymbol, b: PSymbol, cutoff: int = DEFAULT_CUTOFF) -> PSymbol:
    """
    A o_h B = sum_n h^n/n! d_tau^n A d_t^n B with the Λ_h product on odd parts.

    The series is summed exactly when it terminates; otherwise terms with tau
    exponent below ``cutoff`` are dropped and the result is flagged truncated.
    """
    n_pairs = a.space.n_pairs
    terms: Dict[Key, Coefficient] = {}
    cut = False
    for (t1, s1, m1), c1 in a.items():
        for (t2, s2, m2), c2 in b.items():
            odd_part = deformed_monomial_mul(m1, m2, n_pairs)
            if not odd_part:
                continue
            value = c1 * c2
            n = 0
            while True:
                ff = falling_factorial(s1, n) * falling_factorial(t2, n)
                if ff == 0:
                    break
                tau_exp = s1 + s2 - n
                if tau_exp < cutoff:
                    cut = True
                    break
                scalar = value * Coefficient(ff) / factorial(n)
                if n:
                    scalar = scalar * h_power(n)
                for (mask, k), count in odd_part.items():
                    term = scalar * count
                    if k:
                        term = term * h_power(k)
                    accumulate(terms, (t1 + t2 - n, tau_exp, mask), term)
                n += 1
    floor = _max_floor(
        cutoff if cut else None,
        None if a.truncation is None else a.truncation + b.max_tau(),
        None if b.truncation is None else b.truncation + a.max_tau(),
    )
    if cut:
        logger.debug(f"o_h product truncated below tau^{cutoff}")
    return a._with_floor(terms, floor)


def super_commutator_h(a: PSymbol, b: PSymbol, cutoff: int = DEFAULT_CUTOFF) -> PSymbol:
    """[A, B]_h = A o_h B - (-1)^(p(A)p(B)) B o_h A."""
    p_a, p_b = _require_homogeneous(a, b)
    forward = circ_h(a, b, cutoff)
    backward = circ_h(b, a, cutoff)
    if p_a and p_b:
        return forward + backward
    return forward - backward


def deformed_bracket(a: PSymbol, b: PSymbol, cutoff: int = DEFAULT_CUTOFF) -> PSymbol:
    """(1/h)[A, B]_h, the bracket whose h -> 0 limit is the Poisson bracket."""
    return super_commutator_h(a, b, cutoff).scale(Coefficient(1) / param("h"))


def window_equal(a: PSymbol, b: PSymbol, floor: Optional[int] = None) -> bool:
    """Equality on every tau exponent >= the effective floor."""
    floor = _max_floor(floor, a.truncation, b.truncation)
    if floor is None:
        return a._terms == b._terms
    keys = {k for k in a.keys() if k[1] >= floor} | {k for k in b.keys() if k[1] >= floor}
    return all(a.coefficient(k) == b.coefficient(k) for k in keys)


def window_difference(a: PSymbol, b: PSymbol, floor: Optional[int] = None) -> PSymbol:
    floor = _max_floor(floor, a.truncation, b.truncation)
    terms = {}
    for key in set(a.keys()) | set(b.keys()):
        if floor is not None and key[1] < floor:
            continue
        accumulate(terms, key, a.coefficient(key) - b.coefficient(key))
    return a._with_floor(terms, floor)


@dataclass
class ContractionVerdict:
    """Outcome of the first-order contraction test."""

    passed: bool
    divisible: bool
    commutator: PSymbol
    expected: PSymbol
    discrepancy: PSymbol
    floor: Optional[int] = None
    notes: List[str] = field(default_factory=list)


def contraction_first_order(a: PSymbol, b: PSymbol, cutoff: int = DEFAULT_CUTOFF) -> ContractionVerdict:
    """Check lim_{h->0} (1/h)[A, B]_h = {A, B} on the exact window."""
    _require_homogeneous(a, b)
    notes = []
    if "h" in a.parameters() or "h" in b.parameters():
        notes.append("operands depend on h")
    commutator = super_commutator_h(a, b, cutoff)
    h = param("h")
    divisible = all(value.evaluate({"h": 0}).is_zero() for _, value in commutator.items())
    limit_terms = {}
    for key, value in commutator.items():
        accumulate(limit_terms, key, (value / h).evaluate({"h": 0}))
    limit = commutator._with_floor(limit_terms, commutator.truncation)
    expected = poisson_bracket(a, b)
    discrepancy = window_difference(limit, expected)
    passed = divisible and discrepancy.is_zero() and not notes
    if not passed:
        logger.debug(f"Contraction failed for ({a}, {b}): {discrepancy}")
    return ContractionVerdict(
        passed=passed,
        divisible=divisible,
        commutator=commutator,
        expected=expected,
        discrepancy=discrepancy,
        floor=commutator.truncation,
        notes=notes,
    )
