"""Exact coefficient field, term maps and span linear algebra."""

from .coefficient import (
    BaseScalar,
    Coefficient,
    ONE,
    Parameter,
    REGISTRY,
    ZERO,
    as_coefficient,
    canonical_name,
    declare_parameter,
    param,
    parse_scalar,
)
from .linear_algebra import SpanBasis, is_independent, rank
from .term_map import TermMap, accumulate, linear_combination

__all__ = [
    'BaseScalar',
    'Coefficient',
    'ONE',
    'Parameter',
    'REGISTRY',
    'ZERO',
    'as_coefficient',
    'canonical_name',
    'declare_parameter',
    'param',
    'parse_scalar',
    'SpanBasis',
    'is_independent',
    'rank',
    'TermMap',
    'accumulate',
    'linear_combination',
]
