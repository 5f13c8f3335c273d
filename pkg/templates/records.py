# ============================================
# templates/records.py
# ============================================
"""
Run Record Rendering

kv: one ``key=value`` per line, configuration echo first, then the
counters in a fixed order. A run's lines are always emitted as one block.

table: aligned columns for people, one row per run.
"""

from models import RunRecord

TABLE_COLUMNS = (
    ("input", "label"),
    ("module", "module_order"),
    ("rewrite", "rewrite_order"),
    ("strategy", "strategy"),
    ("#all.", "all_pairs"),
    ("#red.", "reduced_pairs"),
    ("#gen.", "nonzero_generators"),
    ("#syz.", "syzygy_signatures"),
    ("reduced GB", "reduced_gb_size"),
    ("time (ms)", "time_ms"),
    ("outcome", "outcome"),
)


def _value(value) -> str:
    if isinstance(value, float):
        return f"{value:.1f}"
    return str(value)


def render_kv(record: RunRecord, extra=()) -> str:
    """
    kv block for one run.

    Args:
        record: The run
        extra: Additional (key, value) pairs appended after the counters
            (verification results)
    """
    items = record.config_items() + record.counter_items() + list(extra)
    return "\n".join(f"{key}={_value(value)}" for key, value in items)


def render_table(records) -> str:
    """Aligned text table, one row per record."""
    rows = [[_value(getattr(r, attr)) for _, attr in TABLE_COLUMNS] for r in records]
    headers = [title for title, _ in TABLE_COLUMNS]
    widths = [max([len(h)] + [len(row[i]) for row in rows]) for i, h in enumerate(headers)]

    def line(cells):
        return "  ".join(cell.rjust(w) if i >= 4 else cell.ljust(w)
                         for i, (cell, w) in enumerate(zip(cells, widths))).rstrip()

    out = [line(headers), line("-" * w for w in widths)]
    out.extend(line(row) for row in rows)
    return "\n".join(out)


def render_history(records) -> str:
    """Stored runs with their id and timestamp."""
    if not records:
        return "No recorded runs."
    blocks = []
    for r in records:
        blocks.append(f"# run {r.id} at {r.created_at}" + (f" verified={r.verified}" if r.verified else ""))
        blocks.append(render_kv(r))
    return "\n".join(blocks)

