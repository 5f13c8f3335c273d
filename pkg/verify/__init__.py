"""
Verify Package - Minimal initialization and exports

This file should ONLY contain imports and exports.
All implementation belongs in separate modules.
"""

from .buchberger import buchberger, s_polynomial
from .groebner import is_groebner, reduce_basis
from .sampling import (
    VerificationReport,
    check_labeled_gb,
    check_principal_syzygies,
    covering_member,
    module_apply,
    module_lead,
    random_module_vector,
)
from .predicates import f5_syzygy_reject, f5_rewritten_reject, gvw_first_reject

# Public API
__all__ = [
    # Oracles
    'buchberger',
    's_polynomial',
    'is_groebner',
    'reduce_basis',

    # Labeled GB sampling
    'VerificationReport',
    'check_labeled_gb',
    'check_principal_syzygies',
    'covering_member',
    'module_apply',
    'module_lead',
    'random_module_vector',

    # Classic criteria
    'f5_syzygy_reject',
    'f5_rewritten_reject',
    'gvw_first_reject',
]
