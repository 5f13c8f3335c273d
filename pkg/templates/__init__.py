"""
Templates Package - Minimal initialization and exports

This file should ONLY contain imports and exports.
All implementation belongs in separate modules.
"""

from .records import TABLE_COLUMNS, render_kv, render_table, render_history

# Public API
__all__ = [
    'TABLE_COLUMNS',
    'render_kv',
    'render_table',
    'render_history',
]
