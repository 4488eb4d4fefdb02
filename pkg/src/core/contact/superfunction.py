#!/usr/bin/env python3
"""
Functions on S^{1|N}: Λ(1,2N) = C[t, t^-1] ⊗ Λ(2N), keyed by (t_exp, mask).
"""

from typing import Dict, Optional, Tuple

from ..arithmetic.coefficient import Coefficient, Scalar, as_coefficient
from ..arithmetic.formatting import format_linear, power
from ..arithmetic.term_map import TermMap, accumulate
from ..errors import MixedParity
from ..grassmann.lambda_algebra import (
    EVEN,
    MIXED,
    ODD,
    LambdaElement,
    OddSpace,
    left_derivative_sign,
    mask_parity,
    monomial_mul,
    popcount,
)

Key = Tuple[int, int]


class SuperFunction(TermMap):
    """Laurent polynomial in t with Grassmann coefficients (no tau)."""

    def __init__(self, terms=None, space: Optional[OddSpace] = None):
        super().__init__(terms)
        self.space = space or OddSpace(2)

    @classmethod
    def monomial(cls, coefficient: Scalar = 1, t: int = 0, mask: int = 0,
                 space: Optional[OddSpace] = None) -> "SuperFunction":
        return cls({(t, mask): as_coefficient(coefficient)}, space)

    @classmethod
    def from_lambda(cls, element: LambdaElement, t: int = 0) -> "SuperFunction":
        return cls({(t, mask): value for mask, value in element.items()}, element.space)

    def parity(self) -> str:
        parities = {mask_parity(key[1]) for key in self._terms}
        if not parities:
            return EVEN
        if len(parities) > 1:
            return MIXED
        return ODD if parities.pop() else EVEN

    def parity_bit(self) -> int:
        parity = self.parity()
        if parity == MIXED:
            raise MixedParity(f"Function {self} has mixed parity")
        return 1 if parity == ODD else 0

    def __mul__(self, other):
        if isinstance(other, SuperFunction):
            terms: Dict[Key, Coefficient] = {}
            for (t1, m1), c1 in self.items():
                for (t2, m2), c2 in other.items():
                    product = monomial_mul(m1, m2)
                    if product is None:
                        continue
                    sign, mask = product
                    value = c1 * c2
                    accumulate(terms, (t1 + t2, mask), -value if sign < 0 else value)
            return self._derive(terms)
        if isinstance(other, (int, Coefficient)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Coefficient)):
            return self.scale(other)
        return NotImplemented

    def d_t(self) -> "SuperFunction":
        return self.map_keys(lambda k: ((k[0] - 1, k[1]), k[0]) if k[0] else None)

    def d_odd(self, bit: int) -> "SuperFunction":
        flag = 1 << bit

        def rekey(key):
            if not key[1] & flag:
                return None
            return (key[0], key[1] ^ flag), left_derivative_sign(bit, key[1])

        return self.map_keys(rekey)

    def shift_t(self, n: int) -> "SuperFunction":
        """Multiply by t^n."""
        return self.map_keys(lambda k: ((k[0] + n, k[1]), 1))

    def euler(self) -> "SuperFunction":
        """E f with E = sum x_i d/dx_i + y_i d/dy_i (odd degree count)."""
        return self.map_keys(lambda k: (k, popcount(k[1])) if k[1] else None)

    def delta(self) -> "SuperFunction":
        """Δ f = 2f - E f."""
        return self.map_keys(lambda k: (k, 2 - popcount(k[1])) if popcount(k[1]) != 2 else None)

    def __str__(self) -> str:
        def factors(key):
            out = [power("t", key[0])] if key[0] else []
            return out + self.space.monomial_names(key[1])

        return format_linear((value, factors(key)) for key, value in self.terms())

    def __repr__(self) -> str:
        return f"SuperFunction({self})"


def odd_poisson_bracket(f: SuperFunction, g: SuperFunction) -> SuperFunction:
    """{f, g}_P.b = (-1)^(p(f)+1) sum_i (d_xi_i f d_eta_i g + d_eta_i f d_xi_i g)."""
    sign = 1 if f.parity_bit() else -1
    g.parity_bit()
    n_pairs = f.space.n_pairs
    total = SuperFunction({}, f.space)
    for i in range(n_pairs):
        xi, eta = i, i + n_pairs
        total = total + f.d_odd(xi) * g.d_odd(eta) + f.d_odd(eta) * g.d_odd(xi)
    return total.scale(sign)


def contact_bracket(f: SuperFunction, g: SuperFunction) -> SuperFunction:
    """{f, g}_K = Δ(f) d_t g - d_t f Δ(g) - {f, g}_P.b."""
    f.parity_bit()
    g.parity_bit()
    return f.delta() * g.d_t() - f.d_t() * g.delta() - odd_poisson_bracket(f, g)
