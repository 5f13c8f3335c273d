# ============================================
# verify/groebner.py
# ============================================
"""
Groebner Basis Checks

Buchberger's S-polynomial test and the canonical reduced basis used to
compare outputs of different algorithms.
"""

from algebra import TermOrder, monomial_lcm, monomial_mul, normal_form
from .buchberger import in_order, s_polynomial


def is_groebner(G, order: TermOrder | None = None) -> bool:
    """
    Check the Buchberger criterion: every S-polynomial reduces to zero.

    Pairs with coprime leading power products are skipped; their
    S-polynomials always have a standard representation, so the answer is
    the same.
    """
    G = [g for g in in_order(G, order) if not g.is_zero()]
    for j in range(len(G)):
        for i in range(j):
            f, g = G[i], G[j]
            if monomial_lcm(f.lpp, g.lpp) == monomial_mul(f.lpp, g.lpp):
                continue
            if not normal_form(s_polynomial(f, g), G).is_zero():
                return False
    return True


def _canonical(polys) -> list:
    if not polys:
        return []
    key = polys[0].ring.order.key
    return sorted(polys, key=lambda p: key(p.lpp), reverse=True)


def reduce_basis(G, order: TermOrder | None = None) -> list:
    """
    Reduced Groebner basis: monic, fully interreduced, sorted by descending lpp.

    Interreduction is repeated until nothing changes, so the result is the
    canonical reduced basis of the ideal whenever G is a Groebner basis.

    Args:
        G: Groebner basis (zeros ignored)
        order: Optional term order

    Returns:
        Canonically ordered list of polynomials
    """
    current = _canonical([g.monic() for g in in_order(G, order) if not g.is_zero()])
    while True:
        kept = []
        for p in reversed(current):
            r = normal_form(p, kept)
            if not r.is_zero():
                kept.append(r.monic())

        reduced = []
        for i, p in enumerate(kept):
            r = normal_form(p, kept[:i] + kept[i + 1:])
            if not r.is_zero():
                reduced.append(r.monic())

        reduced = _canonical(reduced)
        if reduced == current:
            return current
        current = reduced
