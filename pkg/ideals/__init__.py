"""
Ideals Package - Minimal initialization and exports

This file should ONLY contain imports and exports.
All implementation belongs in separate modules.
"""

from .parser import (
    IdealFile,
    parse_ideal_file,
    parse_polynomial,
    read_ideal_file,
    render_ideal_file,
)
from .generators import gen_katsura, gen_cyclic, parse_bench

# Public API
__all__ = [
    # Ideal files
    'IdealFile',
    'parse_ideal_file',
    'parse_polynomial',
    'read_ideal_file',
    'render_ideal_file',

    # Benchmarks
    'gen_katsura',
    'gen_cyclic',
    'parse_bench',
]
