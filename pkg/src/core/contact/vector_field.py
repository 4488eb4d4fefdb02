#!/usr/bin/env python3
"""
Superderivations W(2N): D = f d_t + sum_i (f_i d_xi_i + g_i d_eta_i).

A VectorField is keyed by (component, t_exp, mask) where component 0 is d_t
and component b + 1 is the derivative along the odd generator at bit b.
"""

import logging
from typing import Dict, Optional, Tuple

from ..arithmetic.coefficient import Coefficient, Scalar, as_coefficient
from ..arithmetic.formatting import format_linear, power
from ..arithmetic.term_map import TermMap, accumulate
from ..errors import MixedParity
from ..grassmann.lambda_algebra import EVEN, MIXED, ODD, OddSpace, mask_parity
from ..symbols.psymbol import PSymbol, supercommutative_mul
from .superfunction import SuperFunction

logger = logging.getLogger(__name__)

T_COMPONENT = 0


class VectorField(TermMap):
    """Element of W(2N) in coordinate form."""

    def __init__(self, terms=None, space: Optional[OddSpace] = None):
        super().__init__(terms)
        self.space = space or OddSpace(2)

    @classmethod
    def from_components(cls, components: Dict[int, SuperFunction],
                        space: Optional[OddSpace] = None) -> "VectorField":
        space = space or next(iter(components.values())).space
        terms: Dict[Tuple[int, int, int], Coefficient] = {}
        for component, function in components.items():
            for (t, mask), value in function.items():
                accumulate(terms, (component, t, mask), value)
        return cls(terms, space)

    @classmethod
    def d_t(cls, coefficient: SuperFunction) -> "VectorField":
        return cls.from_components({T_COMPONENT: coefficient}, coefficient.space)

    @classmethod
    def d_odd(cls, bit: int, coefficient: SuperFunction) -> "VectorField":
        return cls.from_components({bit + 1: coefficient}, coefficient.space)

    def component(self, index: int) -> SuperFunction:
        return SuperFunction(
            {(t, mask): value for (c, t, mask), value in self.items() if c == index}, self.space
        )

    def components(self) -> Dict[int, SuperFunction]:
        return {index: self.component(index) for index in range(self.space.size + 1)}

    def parity(self) -> str:
        parities = {(mask_parity(mask) + (1 if c else 0)) & 1 for (c, _, mask) in self._terms}
        if not parities:
            return EVEN
        if len(parities) > 1:
            return MIXED
        return ODD if parities.pop() else EVEN

    def parity_bit(self) -> int:
        parity = self.parity()
        if parity == MIXED:
            raise MixedParity(f"Vector field {self} has mixed parity")
        return 1 if parity == ODD else 0

    def __str__(self) -> str:
        def factors(key):
            c, t, mask = key
            out = [power("t", t)] if t else []
            out += self.space.monomial_names(mask)
            out.append("dt" if c == T_COMPONENT else f"d{self.space.generator_name(c - 1)}")
            return out

        return format_linear((value, factors(key)) for key, value in self.terms())

    def __repr__(self) -> str:
        return f"VectorField({self})"


def apply(field: VectorField, g: SuperFunction) -> SuperFunction:
    """D(g) = f d_t g + sum (f_i d_xi_i g + g_i d_eta_i g), left derivatives."""
    result = SuperFunction({}, g.space)
    for index, coefficient in field.components().items():
        if coefficient.is_zero():
            continue
        derivative = g.d_t() if index == T_COMPONENT else g.d_odd(index - 1)
        if derivative.is_zero():
            continue
        result = result + coefficient * derivative
    return result


def coordinate(index: int, space: OddSpace) -> SuperFunction:
    """The coordinate function t (index 0) or the odd generator at bit index-1."""
    if index == T_COMPONENT:
        return SuperFunction.monomial(1, 1, 0, space)
    return SuperFunction.monomial(1, 0, 1 << (index - 1), space)


def vf_bracket(first: VectorField, second: VectorField) -> VectorField:
    """[D1, D2] = D1 D2 - (-1)^(p1 p2) D2 D1, read off on coordinate functions."""
    p1, p2 = first.parity_bit(), second.parity_bit()
    sign = -1 if p1 and p2 else 1
    components: Dict[int, SuperFunction] = {}
    first_components = first.components()
    second_components = second.components()
    for index in range(first.space.size + 1):
        value = apply(first, second_components[index]) - apply(second, first_components[index]).scale(sign)
        components[index] = value
    return VectorField.from_components(components, first.space)


def divergence(field: VectorField) -> SuperFunction:
    """Div(D) = d_t f + sum_i ((-1)^p(f_i) d_xi_i f_i + (-1)^p(g_i) d_eta_i g_i)."""
    field.parity_bit()
    result = field.component(T_COMPONENT).d_t()
    for index in range(1, field.space.size + 1):
        coefficient = field.component(index)
        if coefficient.is_zero():
            continue
        derivative = coefficient.d_odd(index - 1)
        result = result + (-derivative if coefficient.parity_bit() else derivative)
    return result


def s_alpha_member(field: VectorField, alpha: Scalar, t_shift: Scalar = 0) -> bool:
    """
    Membership in S(2N, alpha): Div(t^alpha D) = 0.

    Evaluated after factoring out t^alpha as (alpha + t_shift) t^-1 f + Div(D) = 0,
    where ``t_shift`` is a formal exponent s for a field written as t^s D.
    """
    exponent = as_coefficient(alpha) + as_coefficient(t_shift)
    condition = field.component(T_COMPONENT).shift_t(-1).scale(exponent) + divergence(field)
    return condition.is_zero()


def euler_field(space: OddSpace, factor: Optional[SuperFunction] = None) -> VectorField:
    """factor * E, E = sum x_i d_xi_i + y_i d_eta_i."""
    factor = factor if factor is not None else SuperFunction.monomial(1, 0, 0, space)
    components = {}
    for bit in range(space.size):
        components[bit + 1] = factor * SuperFunction.monomial(1, 0, 1 << bit, space)
    return VectorField.from_components(components, space)


def hamiltonian_field(f: SuperFunction) -> VectorField:
    """H_f = (-1)^(p(f)+1) sum_i (d_xi_i f d_eta_i + d_eta_i f d_xi_i)."""
    space = f.space
    sign = 1 if f.parity_bit() else -1
    components = {}
    for i in range(space.n_pairs):
        xi, eta = i, i + space.n_pairs
        components[eta + 1] = f.d_odd(xi).scale(sign)
        components[xi + 1] = f.d_odd(eta).scale(sign)
    return VectorField.from_components(components, space)


def contact_field(f: SuperFunction) -> VectorField:
    """D_f = Δ(f) d_t + d_t(f) E - H_f."""
    f.parity_bit()
    space = f.space
    result = VectorField.d_t(f.delta())
    result = result + euler_field(space, f.d_t())
    return result - hamiltonian_field(f)


def field_symbol(field: VectorField) -> PSymbol:
    """First-order identification W(2N) -> P(2N): d_t -> tau, d_xi_i -> eta_i, d_eta_i -> xi_i."""
    space = field.space
    result = PSymbol.zero(space)
    for index, coefficient in field.components().items():
        if coefficient.is_zero():
            continue
        lifted = PSymbol({(t, 0, mask): value for (t, mask), value in coefficient.items()}, space)
        if index == T_COMPONENT:
            symbol = PSymbol.monomial(1, 0, 1, 0, space)
        else:
            symbol = PSymbol.monomial(1, 0, 0, 1 << space.partner(index - 1), space)
        result = result + supercommutative_mul(lifted, symbol)
    return result
