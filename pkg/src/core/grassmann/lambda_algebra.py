#!/usr/bin/env python3
"""
Grassmann algebra Λ(2N) and its h-deformation Λ_h(2N).

Odd monomials are bitmasks over the generators in canonical order
x1 < ... < xN < y1 < ... < yN (x = ξ, y = η): bit i-1 is x_i and bit
N+i-1 is y_i. The deformed product rewrites with y_i x_j = h δ_ij - x_j y_i
until every x stands left of every y.
"""

import logging
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Tuple

from ..arithmetic.coefficient import Coefficient, Scalar, as_coefficient, param
from ..arithmetic.formatting import format_linear
from ..arithmetic.term_map import TermMap, accumulate
from ..errors import MixedParity, ParseError

logger = logging.getLogger(__name__)

EVEN, ODD, MIXED = "even", "odd", "mixed"


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def mask_parity(mask: int) -> int:
    return popcount(mask) & 1


def bits(mask: int) -> List[int]:
    """Set bit positions in ascending (canonical) order."""
    out = []
    position = 0
    while mask:
        if mask & 1:
            out.append(position)
        mask >>= 1
        position += 1
    return out


class OddSpace:
    """The 2N odd generators x1..xN, y1..yN and their bit layout."""

    def __init__(self, n_pairs: int = 2):
        if n_pairs < 1:
            raise ValueError("An odd space needs at least one pair of generators")
        self.n_pairs = n_pairs

    @property
    def size(self) -> int:
        return 2 * self.n_pairs

    @property
    def full_mask(self) -> int:
        return (1 << self.size) - 1

    def xi(self, i: int) -> int:
        """Bit index of x_i (1-based)."""
        self._check_index(i)
        return i - 1

    def eta(self, i: int) -> int:
        """Bit index of y_i (1-based)."""
        self._check_index(i)
        return self.n_pairs + i - 1

    def partner(self, bit: int) -> int:
        """x_i <-> y_i."""
        return bit + self.n_pairs if bit < self.n_pairs else bit - self.n_pairs

    def swap_mask(self, mask: int) -> Tuple[int, int]:
        """
        Interchange x_i with y_i inside a monomial.

        Returns (sign, mask) where sign reorders the image canonically.
        """
        image = [self.partner(b) for b in bits(mask)]
        sign = 1
        for i in range(len(image)):
            for j in range(i + 1, len(image)):
                if image[i] > image[j]:
                    sign = -sign
        new_mask = 0
        for b in image:
            new_mask |= 1 << b
        return sign, new_mask

    def _check_index(self, i: int):
        if not 1 <= i <= self.n_pairs:
            raise ValueError(f"Generator index {i} outside 1..{self.n_pairs}")

    def generator_name(self, bit: int) -> str:
        if bit < self.n_pairs:
            return f"x{bit + 1}"
        return f"y{bit - self.n_pairs + 1}"

    def bit_for_name(self, name: str) -> int:
        """Resolve 'x1'/'xi1'/'ξ1' and 'y1'/'eta1'/'η1' to a bit index."""
        lowered = name.lower()
        for prefix, maker in (("xi", self.xi), ("ξ", self.xi), ("x", self.xi),
                              ("eta", self.eta), ("η", self.eta), ("y", self.eta)):
            if lowered.startswith(prefix) and lowered[len(prefix):].isdigit():
                return maker(int(lowered[len(prefix):]))
        raise ParseError(f"Unknown odd generator {name!r}")

    def monomial_names(self, mask: int) -> List[str]:
        return [self.generator_name(b) for b in bits(mask)]

    def __eq__(self, other) -> bool:
        return isinstance(other, OddSpace) and other.n_pairs == self.n_pairs

    def __hash__(self) -> int:
        return hash(("OddSpace", self.n_pairs))

    def __repr__(self) -> str:
        return f"OddSpace({self.n_pairs})"


def monomial_mul(m1: int, m2: int) -> Optional[Tuple[int, int]]:
    """
    Grassmann product of two canonical monomials.

    Returns (sign, mask) or None when a generator repeats.
    """
    if m1 & m2:
        return None
    swaps = 0
    for b in bits(m2):
        swaps += popcount(m1 >> (b + 1))
    return (-1 if swaps & 1 else 1), m1 | m2


@lru_cache(maxsize=None)
def _normal_order(word: Tuple[int, ...], n_pairs: int) -> Dict[Tuple[int, int], int]:
    """
    Rewrite a word of generator bits into Λ_h normal form.

    Returns {(mask, h_power): integer coefficient}.
    """
    for k in range(len(word) - 1):
        a, b = word[k], word[k + 1]
        if a < b:
            continue
        if a == b:
            return {}
        result: Dict[Tuple[int, int], int] = {}
        swapped = word[:k] + (b, a) + word[k + 2:]
        for key, value in _normal_order(swapped, n_pairs).items():
            result[key] = result.get(key, 0) - value
        if a - b == n_pairs:
            contracted = word[:k] + word[k + 2:]
            for (mask, h_power), value in _normal_order(contracted, n_pairs).items():
                key = (mask, h_power + 1)
                result[key] = result.get(key, 0) + value
        return {key: value for key, value in result.items() if value}
    mask = 0
    for b in word:
        mask |= 1 << b
    return {(mask, 0): 1}


def deformed_monomial_mul(m1: int, m2: int, n_pairs: int) -> Dict[Tuple[int, int], int]:
    """Λ_h product of two canonical monomials as {(mask, h_power): int}."""
    return _normal_order(tuple(bits(m1)) + tuple(bits(m2)), n_pairs)


@lru_cache(maxsize=64)
def h_power(k: int) -> Coefficient:
    return param("h") ** k


def left_derivative_sign(bit: int, mask: int) -> int:
    """Sign from moving generator ``bit`` to the front of ``mask``."""
    return -1 if popcount(mask & ((1 << bit) - 1)) & 1 else 1


class LambdaElement(TermMap):
    """
    Element of Λ(2N) / Λ_h(2N): a map from odd monomial masks to Coefficients.

    ``*`` is the deformed product (h stays formal); ``wedge`` is the
    supercommutative Grassmann product, i.e. the h = 0 specialization.
    """

    def __init__(self, terms=None, space: Optional[OddSpace] = None):
        super().__init__(terms)
        self.space = space or OddSpace(2)

    @classmethod
    def generator(cls, name: str, space: Optional[OddSpace] = None) -> "LambdaElement":
        space = space or OddSpace(2)
        return cls({1 << space.bit_for_name(name): 1}, space)

    @classmethod
    def scalar(cls, value: Scalar, space: Optional[OddSpace] = None) -> "LambdaElement":
        return cls({0: as_coefficient(value)}, space)

    def parity(self) -> str:
        parities = {mask_parity(mask) for mask in self._terms}
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

    def wedge(self, other: "LambdaElement") -> "LambdaElement":
        return grassmann_mul(self, other)

    def __mul__(self, other):
        if isinstance(other, LambdaElement):
            return lambda_h_mul(self, other)
        if isinstance(other, (int, Coefficient)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Coefficient)):
            return self.scale(other)
        return NotImplemented

    def __str__(self) -> str:
        return format_linear(
            (value, self.space.monomial_names(mask)) for mask, value in self.terms()
        )

    def __repr__(self) -> str:
        return f"LambdaElement({self})"


def grassmann_mul(x: LambdaElement, y: LambdaElement) -> LambdaElement:
    terms: Dict[int, Coefficient] = {}
    for m1, c1 in x.items():
        for m2, c2 in y.items():
            product = monomial_mul(m1, m2)
            if product is None:
                continue
            sign, mask = product
            value = c1 * c2
            accumulate(terms, mask, -value if sign < 0 else value)
    return x._derive(terms)


def lambda_h_mul(x: LambdaElement, y: LambdaElement) -> LambdaElement:
    """Product in Λ_h(2N); setting h = 0 recovers ``grassmann_mul``."""
    n_pairs = x.space.n_pairs
    terms: Dict[int, Coefficient] = {}
    for m1, c1 in x.items():
        for m2, c2 in y.items():
            value = c1 * c2
            for (mask, k), count in deformed_monomial_mul(m1, m2, n_pairs).items():
                factor = value * count
                if k:
                    factor = factor * h_power(k)
                accumulate(terms, mask, factor)
    return x._derive(terms)


def odd_derivative(bit: int, x: LambdaElement) -> LambdaElement:
    """Left derivative ∂/∂v for the generator at ``bit``."""
    terms: Dict[int, Coefficient] = {}
    flag = 1 << bit
    for mask, value in x.items():
        if not mask & flag:
            continue
        sign = left_derivative_sign(bit, mask)
        accumulate(terms, mask ^ flag, -value if sign < 0 else value)
    return x._derive(terms)
