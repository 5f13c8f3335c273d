# ============================================
# engine/pairs.py
# ============================================
"""
Critical Pairs and Selection

A critical pair (t_f, f^[u], t_g, g^[v]) is oriented so the left side has
the larger scaled signature. The queue pops pairs by minimal signature,
minimal lcm degree, or insertion order.
"""

import heapq
import itertools
from dataclasses import dataclass
from enum import Enum

from algebra import (
    ModuleOrder,
    Monomial,
    Ordering,
    Polynomial,
    Signature,
    compare_signatures,
    monomial_lcm,
    monomial_quotient,
    poly_axpy,
    signature_mul,
)
from errors import ConfigurationError, InputError, QueueEmpty
from .labeled import LabeledPoly


@dataclass(frozen=True, eq=False)
class CriticalPair:
    left: LabeledPoly
    right: LabeledPoly
    t_left: Monomial
    t_right: Monomial
    lcm: Monomial
    sig_left: Signature
    sig_right: Signature

    @property
    def is_regular(self) -> bool:
        return self.sig_left != self.sig_right

    @property
    def degree(self) -> int:
        return self.lcm.degree

    def __repr__(self) -> str:
        return (f"<CriticalPair #{self.left.id}x#{self.right.id} "
                f"sig={self.sig_left} deg={self.lcm.degree}>")


def make_critical_pair(a: LabeledPoly, b: LabeledPoly, mord: ModuleOrder) -> CriticalPair:
    """
    Build the oriented critical pair of two nonzero members.

    Equal scaled signatures are oriented by id (smaller id on the left), so
    argument order never matters.

    Raises:
        InputError: If either member is a syzygy
    """
    if a.is_syzygy or b.is_syzygy:
        raise InputError("critical pairs need two nonzero members")
    lcm = monomial_lcm(a.poly.lpp, b.poly.lpp)
    ta = monomial_quotient(lcm, a.poly.lpp)
    tb = monomial_quotient(lcm, b.poly.lpp)
    sa = signature_mul(ta, a.sig)
    sb = signature_mul(tb, b.sig)
    order = compare_signatures(sa, sb, mord)
    if order is Ordering.LESS or (order is Ordering.EQUAL and a.id > b.id):
        a, b, ta, tb, sa, sb = b, a, tb, ta, sb, sa
    return CriticalPair(a, b, ta, tb, lcm, sa, sb)


def spoly(pair: CriticalPair) -> tuple[Polynomial, Signature]:
    """S-polynomial t_f f - c t_g g with c = lc(f)/lc(g), signed by the left side."""
    f, g = pair.left.poly, pair.right.poly
    field = f.ring.field
    c = field.div(f.lc, g.lc)
    return poly_axpy(f.mul_term(field.one, pair.t_left), c, pair.t_right, g), pair.sig_left

# ============================================
# Selection
# ============================================

class Strategy(str, Enum):
    SIGNATURE = "sig"
    DEGREE = "degree"
    FIFO = "fifo"


class PairQueue:
    """
    Pending critical pairs.

    Ties are broken by (sig_left, left.id, right.id); the insertion counter
    only makes heap entries unique.
    """

    def __init__(self, strategy, mord: ModuleOrder):
        self.strategy = Strategy(strategy)
        self.module_order = mord
        self._heap = []
        self._counter = itertools.count()

    def push(self, pair: CriticalPair):
        seq = next(self._counter)
        if self.strategy is Strategy.FIFO:
            key = (seq,)
        else:
            key = (self.module_order.key(pair.sig_left), pair.left.id, pair.right.id)
            if self.strategy is Strategy.DEGREE:
                key = (pair.lcm.degree,) + key
        heapq.heappush(self._heap, (key, seq, pair))

    def pop(self) -> CriticalPair:
        if not self._heap:
            raise QueueEmpty("no critical pairs left")
        return heapq.heappop(self._heap)[2]

    def __len__(self) -> int:
        return len(self._heap)

    def __bool__(self) -> bool:
        return bool(self._heap)


def select_pair(queue: PairQueue, mord: ModuleOrder | None = None) -> CriticalPair:
    """
    Pop the next pair according to the queue's strategy.

    Raises:
        QueueEmpty: When nothing is left (normal loop termination)
        ConfigurationError: If ``mord`` is not the order the queue was built with
    """
    if mord is not None and mord is not queue.module_order:
        raise ConfigurationError("queue was built for a different module order")
    return queue.pop()
