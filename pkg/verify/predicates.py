# ============================================
# verify/predicates.py
# ============================================
"""
Classic Criteria as Standalone Predicates

The F5 criteria and the GVW first criterion, written directly from their
definitions and without the generalized machinery, so replaying a run can
confirm that the generalized criterion rejects everything they reject.
"""

from algebra import ModuleKind, Monomial, monomial_divides, signature_divides, signature_mul
from engine import Basis, LabeledPoly
from errors import ConfigurationError


def _require_pot(basis: Basis):
    if basis.module_order.kind is not ModuleKind.POT:
        raise ConfigurationError("F5 criteria are only defined for the POT module order")


def f5_syzygy_reject(t: Monomial, f: LabeledPoly, basis: Basis) -> bool:
    """
    t(f^[x^a e_i]) is F5-divisible: some nonzero g^[.. e_j] with j > i
    (so e_i dominates e_j) has lpp(g) dividing t*x^a.

    Raises:
        ConfigurationError: Under a non-POT module order
    """
    _require_pot(basis)
    scaled = signature_mul(t, f.sig)
    return any(
        g.sig.index > scaled.index and monomial_divides(g.poly.lpp, scaled.mono)
        for g in basis.nonzero_members
    )


def f5_rewritten_reject(t: Monomial, f: LabeledPoly, basis: Basis) -> bool:
    """
    t(f^[u]) is F5-rewritable: a member added after f has a signature
    dividing t*sig(f).

    Raises:
        ConfigurationError: Under a non-POT module order
    """
    _require_pot(basis)
    scaled = signature_mul(t, f.sig)
    return any(g.id > f.id and signature_divides(g.sig, scaled) for g in basis.members)


def gvw_first_reject(t: Monomial, f: LabeledPoly, basis: Basis) -> bool:
    """GVW first criterion: a known syzygy signature divides t*sig(f)."""
    scaled = signature_mul(t, f.sig)
    if any(signature_divides(s, scaled) for s in basis.syzygies_with_index(scaled.index)):
        return True
    return any(signature_divides(g.sig, scaled) for g in basis.syzygy_members)
