# ============================================
# models/run_record.py
# ============================================
"""
Run Record Model

One engine run: the configuration it was started with and the counters it
produced. Records can be rendered (see templates/records.py) and stored in
the ``runs`` table.
"""

from dataclasses import asdict, dataclass, fields
from datetime import datetime

from .database import get_database

# Column order is also the kv output order
COUNTERS = (
    "all_pairs",
    "reduced_pairs",
    "nonzero_generators",
    "syzygy_signatures",
    "reduced_gb_size",
    "time_ms",
    "outcome",
)


def ensure_runs_table(db):
    """Create the runs table on first use and return it."""
    runs = db.t.runs
    if runs not in db.t:
        runs.create(
            id=int,
            label=str,
            characteristic=int,
            term_order=str,
            module_order=str,
            rewrite_order=str,
            strategy=str,
            seed=int,
            input_count=int,
            all_pairs=int,
            reduced_pairs=int,
            nonzero_generators=int,
            syzygy_signatures=int,
            reduced_gb_size=int,
            time_ms=float,
            outcome=str,
            verified=str,
            created_at=str,
            pk='id'
        )
        db.execute("CREATE INDEX IF NOT EXISTS idx_runs_label ON runs(label)")
    return runs


@dataclass
class RunRecord:
    """
    Configuration echo plus the counters of one run.

    ``reduced_gb_size`` is -1 when the run did not complete. ``verified``
    is "pass", "fail" or "" when no verification was requested.
    """

    label: str
    characteristic: int
    term_order: str
    module_order: str
    rewrite_order: str
    strategy: str
    seed: int = 0
    input_count: int = 0
    all_pairs: int = 0
    reduced_pairs: int = 0
    nonzero_generators: int = 0
    syzygy_signatures: int = 0
    reduced_gb_size: int = -1
    time_ms: float = 0.0
    outcome: str = "complete"
    verified: str = ""
    created_at: str = ""
    id: int | None = None

    @classmethod
    def from_row(cls, row) -> "RunRecord":
        """Build from a fastlite row (dict or object)."""
        if not isinstance(row, dict):
            row = vars(row)
        names = {f.name for f in fields(cls)}
        return cls(**{k: v for k, v in row.items() if k in names})

    def is_consistent(self) -> bool:
        return (self.reduced_pairs <= self.all_pairs
                and self.nonzero_generators <= self.input_count + self.reduced_pairs)

    def config_items(self) -> list:
        return [
            ("input", self.label),
            ("char", self.characteristic),
            ("order", self.term_order),
            ("module_order", self.module_order),
            ("rewrite_order", self.rewrite_order),
            ("strategy", self.strategy),
        ]

    def counter_items(self) -> list:
        return [(name, getattr(self, name)) for name in COUNTERS]

    # Persistence
    def save(self) -> "RunRecord":
        """Insert this record and return it with ``id`` and ``created_at`` set."""
        runs = ensure_runs_table(get_database())
        data = asdict(self)
        data.pop("id")
        data["created_at"] = self.created_at or datetime.now().isoformat()
        result = runs.insert(**data)

        # Handle both dict and object returns from fastlite
        if isinstance(result, dict):
            self.id = result['id']
        elif hasattr(result, 'id'):
            self.id = result.id
        else:
            self.id = result
        self.created_at = data["created_at"]
        return self

    @classmethod
    def get_by_id(cls, run_id: int) -> "RunRecord | None":
        runs = ensure_runs_table(get_database())
        rows = runs(where="id = ?", where_args=[run_id], limit=1)
        return cls.from_row(rows[0]) if rows else None

    @classmethod
    def recent(cls, limit: int = 20) -> list:
        """Newest records first."""
        runs = ensure_runs_table(get_database())
        return [cls.from_row(row) for row in runs(order_by="id DESC", limit=limit)]

    @classmethod
    def by_input(cls, label: str, limit: int = 50) -> list:
        runs = ensure_runs_table(get_database())
        rows = runs(where="label = ?", where_args=[label], order_by="id DESC", limit=limit)
        return [cls.from_row(row) for row in rows]
