# ============================================
# engine/criterion.py
# ============================================
"""
Generalized Rewritable Criterion

t(f^[u]) is gen-rewritable by B when some member g^[v] of B has a signature
dividing lpp(t u) and ranks strictly below f^[u] under a partial order "<".
The order is pluggable:

- F5: syzygies rank below everything; otherwise later insertion is smaller.
- GVW: compare lpp of both members scaled to the lcm of their signatures;
  ties go to the later insertion.
- INVERTED: earlier insertion is smaller. Not admissible; it only exists
  to exercise the admissibility monitor.
"""

import logging
from dataclasses import asdict, dataclass
from enum import Enum

from algebra import (
    Ordering,
    Polynomial,
    TermOrder,
    ZERO_MONOMIAL,
    monomial_divides,
    monomial_lcm,
    monomial_mul,
    monomial_quotient,
    signature_mul,
)
from errors import AdmissibilityError
from .labeled import Basis, LabeledPoly

logger = logging.getLogger(__name__)


class RewriteKind(str, Enum):
    F5 = "f5"
    GVW = "gvw"
    INVERTED = "inverted"


@dataclass(frozen=True)
class RewriteOrder:
    """The partial order "<" used by the criterion."""

    kind: RewriteKind
    term_order: TermOrder | None = None

    @classmethod
    def create(cls, kind, term_order: TermOrder | None = None) -> "RewriteOrder":
        return cls(RewriteKind(kind), term_order)


@dataclass
class RejectionStats:
    """Per-run counters; ``seen`` equals the sum of the five outcomes."""

    generated: int = 0
    seen: int = 0
    not_regular: int = 0
    rewritable_left: int = 0
    rewritable_right: int = 0
    reduced: int = 0
    reduced_to_zero: int = 0

    @property
    def rejected(self) -> int:
        return self.not_regular + self.rewritable_left + self.rewritable_right

    @property
    def really_reduced(self) -> int:
        """Pairs whose S-polynomial was actually reduced (zero results included)."""
        return self.reduced + self.reduced_to_zero

    def is_consistent(self) -> bool:
        return self.seen == self.rejected + self.really_reduced and self.seen <= self.generated

    def as_dict(self) -> dict:
        return asdict(self)

# ============================================
# Partial Orders
# ============================================

def _scaled_lpp(member: LabeledPoly, lcm):
    if member.is_syzygy:
        return ZERO_MONOMIAL
    return monomial_mul(monomial_quotient(lcm, member.sig.mono), member.poly.lpp)


def rewrite_compare(a: LabeledPoly, b: LabeledPoly, basis: Basis | None, order: RewriteOrder) -> Ordering:
    """
    Compare two members under the rewrite order.

    Args:
        a, b: Members (or syzygy pseudo-members) of the basis
        basis: Snapshot the comparison is made against
        order: Rewrite order

    Returns:
        LESS if a < b, GREATER if b < a, EQUAL for the same member,
        INCOMPARABLE for GVW members with different signature indices
    """
    if a is b:
        return Ordering.EQUAL

    if order.kind is RewriteKind.GVW:
        if a.sig.index != b.sig.index:
            return Ordering.INCOMPARABLE
        lcm = monomial_lcm(a.sig.mono, b.sig.mono)
        term_order = order.term_order or a.poly.ring.order
        result = Ordering.of(term_order.key(_scaled_lpp(a, lcm)), term_order.key(_scaled_lpp(b, lcm)))
        if result is not Ordering.EQUAL:
            return result
        return Ordering.of(b.id, a.id)

    if a.is_syzygy != b.is_syzygy:
        return Ordering.LESS if a.is_syzygy else Ordering.GREATER
    if order.kind is RewriteKind.F5:
        return Ordering.of(b.id, a.id)
    return Ordering.of(a.id, b.id)

# ============================================
# Criterion
# ============================================

def gen_rewritable(t, f: LabeledPoly, basis: Basis, order: RewriteOrder) -> LabeledPoly | None:
    """
    Find a witness that t(f^[u]) is gen-rewritable by the basis.

    Syzygy signatures are scanned first (they rank below every nonzero
    member), then members of the same index from the newest down.

    Returns:
        The witness member, a pseudo-member (id -1) for a bare syzygy
        signature, or None
    """
    target = signature_mul(t, f.sig)
    mono = target.mono

    for s in basis.syzygies_with_index(target.index):
        if monomial_divides(s.mono, mono):
            return LabeledPoly(-1, Polynomial.zero(f.poly.ring), s)

    for g in reversed(basis.members_with_index(target.index)):
        if g is f:
            continue
        if monomial_divides(g.sig.mono, mono) and rewrite_compare(g, f, basis, order) is Ordering.LESS:
            return g
    return None


def pair_rejected(pair, basis: Basis, order: RewriteOrder, stats: RejectionStats) -> bool:
    """
    Decide whether a critical pair is skipped.

    A pair is skipped when it is not regular (equal scaled signatures) or
    when either scaled side is gen-rewritable. The matching counter in
    ``stats`` is incremented.
    """
    stats.seen += 1
    if pair.sig_left == pair.sig_right:
        stats.not_regular += 1
        return True
    if gen_rewritable(pair.t_left, pair.left, basis, order) is not None:
        stats.rewritable_left += 1
        return True
    if gen_rewritable(pair.t_right, pair.right, basis, order) is not None:
        stats.rewritable_right += 1
        return True
    return False


def assert_admissible(new: LabeledPoly, source: LabeledPoly, basis: Basis, order: RewriteOrder) -> bool:
    """
    Check that a freshly reduced member ranks below the member it came from.

    Incomparable pairs (GVW, different indices) pass vacuously.

    Raises:
        AdmissibilityError: If new is not strictly smaller than source
    """
    result = rewrite_compare(new, source, basis, order)
    if result is Ordering.INCOMPARABLE or result is Ordering.LESS:
        return True
    logger.error(f"❌ Admissibility violated under {order.kind.value}: #{new.id} vs #{source.id}")
    raise AdmissibilityError(new, source, order.kind.value)
