# ============================================
# verify/buchberger.py
# ============================================
"""
Buchberger Oracle

Textbook pair-and-reduce loop with no criteria at all, kept deliberately
independent of the signature engine. Only meant for small instances.
"""

import logging
from collections import deque

from algebra import (
    PolyRing,
    Polynomial,
    TermOrder,
    monomial_lcm,
    monomial_quotient,
    normal_form,
    poly_axpy,
)
from errors import InputError

logger = logging.getLogger(__name__)


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    """Classic S-polynomial (lcm/lpp(f)) f - (lc(f)/lc(g)) (lcm/lpp(g)) g."""
    lcm = monomial_lcm(f.lpp, g.lpp)
    field = f.ring.field
    return poly_axpy(
        f.mul_term(field.one, monomial_quotient(lcm, f.lpp)),
        field.div(f.lc, g.lc),
        monomial_quotient(lcm, g.lpp),
        g,
    )


def in_order(polys, order: TermOrder | None) -> list:
    """Move polynomials into a ring with ``order`` (no-op when None)."""
    polys = list(polys)
    if order is None or not polys or polys[0].ring.order == order:
        return polys
    src = polys[0].ring
    ring = PolyRing(src.variables, src.field, order)
    return [f.to_ring(ring) for f in polys]


def buchberger(F, order: TermOrder | None = None) -> list:
    """
    Groebner basis by the plain Buchberger algorithm.

    Args:
        F: Nonzero polynomials over one ring
        order: Optional term order (defaults to the ring's)

    Returns:
        List of monic polynomials forming a Groebner basis
    """
    G = [f.monic() for f in in_order(F, order)]
    if not G or any(f.is_zero() for f in G):
        raise InputError("buchberger needs nonzero generators")

    pairs = deque((i, j) for j in range(len(G)) for i in range(j))
    reductions = 0
    while pairs:
        i, j = pairs.popleft()
        r = normal_form(s_polynomial(G[i], G[j]), G)
        reductions += 1
        if not r.is_zero():
            G.append(r.monic())
            k = len(G) - 1
            pairs.extend((i, k) for i in range(k))

    logger.debug(f"Buchberger oracle: {reductions} S-polynomials, {len(G)} elements")
    return G
