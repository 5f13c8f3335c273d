"""
Algebra Package - Minimal initialization and exports

This file should ONLY contain imports and exports.
All implementation belongs in separate modules.
"""

from .field import PrimeField, RationalField, make_field
from .monomial import (
    Monomial,
    Ordering,
    OrderKind,
    TermOrder,
    ZERO_MONOMIAL,
    MAX_EXPONENT,
    compare_monomials,
    monomial_divides,
    monomial_lcm,
    monomial_mul,
    monomial_quotient,
)
from .polynomial import PolyRing, Polynomial, poly_axpy, normal_form
from .signature import (
    ModuleKind,
    ModuleOrder,
    Signature,
    ZERO_SIGNATURE,
    compare_signatures,
    signature_divides,
    signature_mul,
)

# Public API
__all__ = [
    # Fields
    'PrimeField',
    'RationalField',
    'make_field',

    # Monomials
    'Monomial',
    'Ordering',
    'OrderKind',
    'TermOrder',
    'ZERO_MONOMIAL',
    'MAX_EXPONENT',
    'compare_monomials',
    'monomial_divides',
    'monomial_lcm',
    'monomial_mul',
    'monomial_quotient',

    # Polynomials
    'PolyRing',
    'Polynomial',
    'poly_axpy',
    'normal_form',

    # Signatures
    'ModuleKind',
    'ModuleOrder',
    'Signature',
    'ZERO_SIGNATURE',
    'compare_signatures',
    'signature_divides',
    'signature_mul',
]
