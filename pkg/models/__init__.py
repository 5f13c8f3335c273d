"""
Models Package - Minimal initialization and exports

This file should ONLY contain imports and exports.
All implementation belongs in separate modules.
"""

from .database import init_database, get_database, close_database
from .run_record import RunRecord, COUNTERS, ensure_runs_table

# Public API
__all__ = [
    # Database
    'init_database',
    'get_database',
    'close_database',

    # Models
    'RunRecord',
    'COUNTERS',
    'ensure_runs_table',
]
