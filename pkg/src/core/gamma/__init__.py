"""Γ(σ1, σ2, σ3), its concrete realizations and the verifiers that compare them."""

from .gamma_algebra import (
    EVEN_LABELS,
    LABELS,
    ODD_LABELS,
    GammaAlgebra,
    GammaElement,
    JacobiViolation,
    build_gamma,
    gamma_for_alpha,
    jacobi_check,
)
from .generators import (
    PHI_ASSIGNMENT,
    VARIANTS,
    LinearMap,
    gamma_alpha_generators,
    odd_generators,
    phi_map,
    variant_bracket,
)
from .verifiers import (
    GeneratedAlgebra,
    HomVerdict,
    LimitVerdict,
    PslVerdict,
    contraction_limit_check,
    generate_from_odd,
    hom_check,
    matrix_dictionary_check,
    psl_check,
    pseudo_dictionary_check,
    relation_check,
    scaling_isomorphism_check,
)

__all__ = [
    'EVEN_LABELS',
    'GammaAlgebra',
    'GammaElement',
    'GeneratedAlgebra',
    'HomVerdict',
    'JacobiViolation',
    'LABELS',
    'LimitVerdict',
    'LinearMap',
    'ODD_LABELS',
    'PHI_ASSIGNMENT',
    'PslVerdict',
    'VARIANTS',
    'build_gamma',
    'contraction_limit_check',
    'gamma_alpha_generators',
    'gamma_for_alpha',
    'generate_from_odd',
    'hom_check',
    'jacobi_check',
    'matrix_dictionary_check',
    'odd_generators',
    'phi_map',
    'psl_check',
    'pseudo_dictionary_check',
    'relation_check',
    'scaling_isomorphism_check',
    'variant_bracket',
]
