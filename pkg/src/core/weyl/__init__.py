"""Weyl algebra, (2|2) supermatrices, matrix embeddings and the V^mu module."""

from .embeddings import (
    GAMMA_LABELS,
    J_DICTIONARY,
    EmbeddingFailure,
    ShapeVerdict,
    central_element,
    central_embedding_check,
    embed_combination,
    embed_I,
    embed_J,
    gamma_dictionary,
    gamma_matrix,
    gamma_matrix_from_dictionary,
    grading_component,
    same_image_check,
)
from .representation import (
    BASIS_ORDER,
    VVector,
    consistency_failures,
    formal_mu,
    matrix_action,
    rep_action,
    rep_matrix,
    representation_failures,
)
from .supermatrix import WeylSuperMatrix, supermatrix_bracket
from .weyl_algebra import WeylElement, weyl_commutator, weyl_mul

__all__ = [
    'BASIS_ORDER',
    'EmbeddingFailure',
    'GAMMA_LABELS',
    'J_DICTIONARY',
    'ShapeVerdict',
    'VVector',
    'WeylElement',
    'WeylSuperMatrix',
    'central_element',
    'central_embedding_check',
    'consistency_failures',
    'embed_I',
    'embed_J',
    'embed_combination',
    'formal_mu',
    'gamma_dictionary',
    'gamma_matrix',
    'gamma_matrix_from_dictionary',
    'grading_component',
    'matrix_action',
    'rep_action',
    'rep_matrix',
    'representation_failures',
    'same_image_check',
    'supermatrix_bracket',
    'weyl_commutator',
    'weyl_mul',
]
