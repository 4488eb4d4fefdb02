"""Grassmann algebra Λ(2N) and the deformed Λ_h(2N)."""

from .lambda_algebra import (
    EVEN,
    MIXED,
    ODD,
    LambdaElement,
    OddSpace,
    bits,
    deformed_monomial_mul,
    grassmann_mul,
    lambda_h_mul,
    left_derivative_sign,
    mask_parity,
    monomial_mul,
    odd_derivative,
    popcount,
)

__all__ = [
    'EVEN',
    'MIXED',
    'ODD',
    'LambdaElement',
    'OddSpace',
    'bits',
    'deformed_monomial_mul',
    'grassmann_mul',
    'lambda_h_mul',
    'left_derivative_sign',
    'mask_parity',
    'monomial_mul',
    'odd_derivative',
    'popcount',
]
