# ============================================
# models/database.py
# ============================================
"""
Database Management

Run history lives in a small SQLite file managed by fastlite. Nothing is
opened until a command actually records or lists runs.
"""

import logging
from pathlib import Path

from fastlite import Database

import config

logger = logging.getLogger(__name__)

_db = None


def init_database(path=None) -> Database:
    """
    Open (creating if needed) the run history database.

    Args:
        path: Database file; defaults to config.RESULTS_DB_PATH

    Returns:
        The fastlite Database, also kept as the module-wide instance
    """
    global _db
    path = Path(path or config.RESULTS_DB_PATH)
    path.parent.mkdir(parents=True, exist_ok=True)
    _db = Database(str(path))

    from .run_record import ensure_runs_table
    runs = ensure_runs_table(_db)
    logger.info(f"Database initialized: {path} ({len(runs())} runs)")
    return _db


def get_database() -> Database:
    """Get database instance, opening the default one on first use"""
    if _db is None:
        return init_database()
    return _db


def close_database():
    global _db
    if _db is not None:
        _db.conn.close()
        _db = None
