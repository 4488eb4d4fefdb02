#!/usr/bin/env python3
"""
The Weyl algebra over C[t, t^-1] with d = t d/dt.

Elements are kept in normal form sum c t^a d^k (all d's to the right);
products are re-normalized through d t^b = t^b (d + b).
"""

from math import comb
from typing import Dict, Optional

from ..arithmetic.coefficient import Coefficient, Scalar, as_coefficient
from ..arithmetic.formatting import format_linear, power
from ..arithmetic.term_map import TermMap, accumulate


class WeylElement(TermMap):
    """sum c t^a d^k keyed by (a, k)."""

    @classmethod
    def monomial(cls, coefficient: Scalar = 1, t: int = 0, d: int = 0) -> "WeylElement":
        if d < 0:
            raise ValueError(f"Negative power of d: {d}")
        return cls({(t, d): as_coefficient(coefficient)})

    @classmethod
    def t_power(cls, n: int) -> "WeylElement":
        return cls.monomial(1, n, 0)

    @classmethod
    def d_power(cls, k: int = 1) -> "WeylElement":
        return cls.monomial(1, 0, k)

    @classmethod
    def scalar(cls, value: Scalar) -> "WeylElement":
        return cls.monomial(value, 0, 0)

    def __mul__(self, other):
        if isinstance(other, WeylElement):
            return weyl_mul(self, other)
        if isinstance(other, (int, Coefficient)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Coefficient)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, exponent: int) -> "WeylElement":
        if exponent < 0:
            raise ValueError("Weyl elements have no inverse powers")
        result = WeylElement.scalar(1)
        for _ in range(exponent):
            result = result * self
        return result

    def max_d(self) -> int:
        return max((k for _, k in self._terms), default=0)

    def t_degrees(self):
        return sorted({a for a, _ in self._terms})

    def act_on_power(self, m: int, mu: Optional[Scalar] = None) -> Dict[int, Coefficient]:
        """Image of t^(m + mu) as {t exponent shift a + m: coefficient}; d acts by m + mu."""
        eigenvalue = as_coefficient(m) + (as_coefficient(mu) if mu is not None else 0)
        result: Dict[int, Coefficient] = {}
        for (a, k), value in self._terms.items():
            accumulate(result, a + m, value * eigenvalue ** k)
        return result

    def __str__(self) -> str:
        def factors(key):
            a, k = key
            out = [power("t", a)] if a else []
            if k:
                out.append(power("d", k))
            return out

        # highest power of d first
        ordered = sorted(self.items(), key=lambda item: (-item[0][1], item[0][0]))
        return format_linear((value, factors(key)) for key, value in ordered)

    def __repr__(self) -> str:
        return f"WeylElement({self})"


def weyl_mul(x: WeylElement, y: WeylElement) -> WeylElement:
    """(t^a d^p)(t^b d^q) = sum_j C(p, j) b^(p-j) t^(a+b) d^(j+q)."""
    terms: Dict[tuple, Coefficient] = {}
    for (a, p), c1 in x.items():
        for (b, q), c2 in y.items():
            value = c1 * c2
            for j in range(p + 1):
                factor = comb(p, j) * b ** (p - j)
                if factor:
                    accumulate(terms, (a + b, j + q), value * factor)
    return x._derive(terms)


def weyl_commutator(x: WeylElement, y: WeylElement) -> WeylElement:
    return weyl_mul(x, y) - weyl_mul(y, x)
