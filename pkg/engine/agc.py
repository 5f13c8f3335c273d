# ============================================
# engine/agc.py
# ============================================
"""
AGC Main Loop

Non-incremental signature-based Groebner basis computation driven by the
generalized rewritable criterion:

    G <- inputs plus principal syzygy signatures
    pairs <- all critical pairs of the inputs
    while pairs:
        pick a pair
        if regular and not gen-rewritable:
            reduce its S-polynomial with signature-restricted top reductions
            add the result (or record a syzygy) and its new pairs/syzygies

Any selection strategy gives a correct result as long as the rewrite order
is admissible; the admissibility monitor checks this on every reduction.
"""

import logging
import time
from dataclasses import dataclass
from enum import Enum
from typing import Callable

import config
from algebra import (
    ModuleKind,
    ModuleOrder,
    OrderKind,
    PolyRing,
    Polynomial,
    Signature,
    make_field,
    monomial_divides,
    monomial_quotient,
    poly_axpy,
    signature_mul,
)
from errors import ConfigurationError, InputError
from .criterion import RejectionStats, RewriteKind, RewriteOrder, assert_admissible, pair_rejected
from .labeled import Basis, LabeledPoly, init_basis, record_zero_reduction, syzygy_signature
from .pairs import PairQueue, Strategy, make_critical_pair, select_pair, spoly

logger = logging.getLogger(__name__)


class Outcome(str, Enum):
    COMPLETE = "complete"
    CAPPED = "capped"
    FAILED = "failed"


@dataclass
class EngineConfig:
    """
    Settings for one run.

    ``order`` and ``characteristic`` default to None, meaning "use the
    ring the inputs already live in".
    """

    order: str | None = None
    module_order: str = config.DEFAULT_MODULE_ORDER
    rewrite_order: str = config.DEFAULT_REWRITE_ORDER
    strategy: str = config.DEFAULT_STRATEGY
    characteristic: int | None = None
    max_pairs: int = config.MAX_PAIRS
    max_degree: int = config.MAX_DEGREE
    debug: bool = config.DEBUG

    def __post_init__(self):
        try:
            if self.order is not None:
                OrderKind(self.order)
            ModuleKind(self.module_order)
            RewriteKind(self.rewrite_order)
            Strategy(self.strategy)
        except ValueError as e:
            raise ConfigurationError(str(e)) from e
        if self.max_pairs <= 0 or self.max_degree <= 0:
            raise ConfigurationError("safety caps must be positive")


@dataclass
class AGCResult:
    basis: Basis
    stats: RejectionStats
    outcome: Outcome
    selections: int = 0
    elapsed_ms: float = 0.0
    cap_reason: str | None = None
    queue_left: int = 0

    def nonzero_polynomials(self) -> list:
        return [g.poly for g in self.basis.nonzero_members]

    def __iter__(self):
        # Unpacks as (basis, stats)
        yield self.basis
        yield self.stats

# ============================================
# Reduction
# ============================================

def one_side_reduce(p: Polynomial, sig: Signature, basis: Basis, mord: ModuleOrder,
                    debug: bool = False) -> LabeledPoly:
    """
    Top-reduce p using only reducers whose scaled signature is strictly
    below ``sig``.

    Among eligible reducers the one with the smallest scaled signature wins,
    then the smallest id. The result keeps ``sig`` and gets the next id of
    the basis (it is not appended here).

    Args:
        p: Polynomial to reduce
        sig: Its signature
        basis: Reducers are its nonzero members
        mord: Module order of the run
        debug: Check reducer legality, lpp decrease and term-list invariants

    Returns:
        Unappended LabeledPoly (zero poly means a syzygy was found)
    """
    mkey = mord.key
    sig_key = mkey(sig)
    field = p.ring.field
    term_key = p.ring.order.key
    current = p

    while current.terms:
        lead, lead_coeff = current.terms[0]
        best = best_t = best_key = None
        for h in basis.nonzero_members:
            h_lead = h.poly.terms[0][0]
            if not monomial_divides(h_lead, lead):
                continue
            t = monomial_quotient(lead, h_lead)
            k = mkey(signature_mul(t, h.sig))
            if k < sig_key and (best is None or k < best_key):
                best, best_t, best_key = h, t, k
        if best is None:
            break
        reduced = poly_axpy(current, field.div(lead_coeff, best.poly.lc), best_t, best.poly)
        if debug:
            assert best_key < sig_key, "reducer signature not strictly smaller"
            assert term_key(reduced.lpp) < term_key(lead), "lpp did not decrease"
            reduced.check_invariants()
        current = reduced

    return LabeledPoly(basis.next_id, current, sig)

# ============================================
# Main Loop
# ============================================

def _engine_ring(inputs, cfg: EngineConfig) -> PolyRing:
    ring = inputs[0].ring
    if cfg.characteristic is not None and cfg.characteristic != ring.field.characteristic:
        ring = ring.with_field(make_field(cfg.characteristic))
    if cfg.order is not None and OrderKind(cfg.order) is not ring.order.kind:
        ring = ring.with_order(cfg.order)
    return ring


def agc_run(inputs, cfg: EngineConfig | None = None,
            observer: Callable | None = None) -> AGCResult:
    """
    Compute a labeled Groebner basis of the ideal generated by ``inputs``.

    Args:
        inputs: Nonzero polynomials over one ring
        cfg: Engine configuration (defaults from config.py)
        observer: Optional callback ``observer(pair, basis, rejected)`` called
            at every selection, before the basis changes

    Returns:
        AGCResult; ``outcome`` is CAPPED if a safety cap stopped the run

    Raises:
        InputError: Invalid inputs
        AdmissibilityError: The rewrite order was not admissible on this run
    """
    cfg = cfg or EngineConfig()
    inputs = list(inputs)
    if not inputs:
        raise InputError("at least one generator is required")
    ring = _engine_ring(inputs, cfg)
    inputs = [f.to_ring(ring) for f in inputs]

    mord = ModuleOrder.create(cfg.module_order, ring.order, inputs)
    rorder = RewriteOrder.create(cfg.rewrite_order, ring.order)
    basis = init_basis(inputs, mord)
    queue = PairQueue(cfg.strategy, mord)
    stats = RejectionStats()

    initial = basis.nonzero_members
    for j in range(len(initial)):
        for i in range(j):
            queue.push(make_critical_pair(initial[i], initial[j], mord))
            stats.generated += 1

    logger.info(f"🚀 AGC start: {len(inputs)} generators in {ring}, module={mord.kind.value}, "
                f"rewrite={rorder.kind.value}, strategy={queue.strategy.value}")

    start = time.perf_counter()
    outcome = Outcome.COMPLETE
    cap_reason = None
    selections = 0
    m = len(inputs)

    while queue:
        if selections >= cfg.max_pairs:
            outcome, cap_reason = Outcome.CAPPED, f"more than {cfg.max_pairs} pair selections"
            break
        pair = select_pair(queue, mord)
        if pair.lcm.degree > cfg.max_degree:
            queue.push(pair)
            outcome, cap_reason = Outcome.CAPPED, f"pair degree {pair.lcm.degree} above {cfg.max_degree}"
            break
        selections += 1
        if selections % config.PROGRESS_EVERY == 0:
            logger.debug(f"… {selections} selections, {len(queue)} queued, {len(basis.nonzero_members)} generators")

        rejected = pair_rejected(pair, basis, rorder, stats)
        if observer is not None:
            observer(pair, basis, rejected)
        if rejected:
            continue

        poly, sig = spoly(pair)
        new = one_side_reduce(poly, sig, basis, mord, debug=cfg.debug)
        if cfg.debug:
            assert new.sig == pair.sig_left, "reduction changed the signature"
        assert_admissible(new, pair.left, basis, rorder)

        if new.is_syzygy:
            stats.reduced_to_zero += 1
            record_zero_reduction(basis, sig)
            continue

        stats.reduced += 1
        member = basis.append(new.poly.monic(), sig)
        for i in range(1, m + 1):
            syz = syzygy_signature(member, i, basis.inputs, mord)
            if syz is not None:
                basis.add_syzygy_signature(syz)
        for g in basis.nonzero_members:
            if g is not member:
                queue.push(make_critical_pair(g, member, mord))
                stats.generated += 1

    elapsed_ms = (time.perf_counter() - start) * 1000.0
    if outcome is Outcome.CAPPED:
        logger.warning(f"⚠️ AGC capped: {cap_reason}; returning partial basis")
    logger.info(f"✅ AGC {outcome.value}: {stats.generated} pairs, {stats.really_reduced} reduced, "
                f"{len(basis.nonzero_members)} generators in {elapsed_ms:.0f} ms")

    return AGCResult(basis, stats, outcome, selections, elapsed_ms, cap_reason, len(queue))
