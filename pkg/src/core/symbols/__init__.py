"""Pseudodifferential symbols: Poisson bracket, o_h product and contraction."""

from .psymbol import (
    DEFAULT_CUTOFF,
    ContractionVerdict,
    PSymbol,
    circ_h,
    contraction_first_order,
    deformed_bracket,
    falling_factorial,
    poisson_bracket,
    super_commutator_h,
    supercommutative_mul,
    window_difference,
    window_equal,
)

__all__ = [
    'DEFAULT_CUTOFF',
    'ContractionVerdict',
    'PSymbol',
    'circ_h',
    'contraction_first_order',
    'deformed_bracket',
    'falling_factorial',
    'poisson_bracket',
    'super_commutator_h',
    'supercommutative_mul',
    'window_difference',
    'window_equal',
]
