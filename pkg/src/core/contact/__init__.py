"""Vector fields, contact correspondence, labeled field families and cocycles."""

from .cocycles import (
    CocycleTable,
    CocycleViolation,
    cocycle_verify,
    k4_cocycle_table,
    perturbed_s2_table,
    s2_cocycle_table,
)
from .field_families import (
    K4_LABELS,
    S2_LABELS,
    S_ALPHA_LABELS,
    LabeledFamily,
    codimension_element,
    format_combination,
    format_member,
    k4_basis,
    k4_family,
    odd_word,
    s2_basis,
    s2_family,
    s_alpha_basis,
    s_alpha_family,
    symbol,
)
from .superfunction import SuperFunction, contact_bracket, odd_poisson_bracket
from .vector_field import (
    VectorField,
    apply,
    contact_field,
    coordinate,
    divergence,
    euler_field,
    field_symbol,
    hamiltonian_field,
    s_alpha_member,
    vf_bracket,
)

__all__ = [
    'CocycleTable',
    'CocycleViolation',
    'K4_LABELS',
    'LabeledFamily',
    'S2_LABELS',
    'S_ALPHA_LABELS',
    'SuperFunction',
    'VectorField',
    'apply',
    'cocycle_verify',
    'codimension_element',
    'contact_bracket',
    'contact_field',
    'coordinate',
    'divergence',
    'euler_field',
    'field_symbol',
    'format_combination',
    'format_member',
    'hamiltonian_field',
    'k4_basis',
    'k4_cocycle_table',
    'k4_family',
    'odd_poisson_bracket',
    'odd_word',
    'perturbed_s2_table',
    's2_basis',
    's2_cocycle_table',
    's2_family',
    's_alpha_basis',
    's_alpha_family',
    's_alpha_member',
    'symbol',
    'vf_bracket',
]
