"""
Engine Package - Minimal initialization and exports

This file should ONLY contain imports and exports.
All implementation belongs in separate modules.
"""

from .labeled import LabeledPoly, Basis, init_basis, syzygy_signature, record_zero_reduction
from .criterion import (
    RewriteKind,
    RewriteOrder,
    RejectionStats,
    rewrite_compare,
    gen_rewritable,
    pair_rejected,
    assert_admissible,
)
from .pairs import CriticalPair, PairQueue, Strategy, make_critical_pair, select_pair, spoly
from .agc import EngineConfig, AGCResult, Outcome, one_side_reduce, agc_run

# Public API
__all__ = [
    # Labeled polynomials
    'LabeledPoly',
    'Basis',
    'init_basis',
    'syzygy_signature',
    'record_zero_reduction',

    # Criterion
    'RewriteKind',
    'RewriteOrder',
    'RejectionStats',
    'rewrite_compare',
    'gen_rewritable',
    'pair_rejected',
    'assert_admissible',

    # Pairs
    'CriticalPair',
    'PairQueue',
    'Strategy',
    'make_critical_pair',
    'select_pair',
    'spoly',

    # Main loop
    'EngineConfig',
    'AGCResult',
    'Outcome',
    'one_side_reduce',
    'agc_run',
]
