# ============================================
# engine/labeled.py
# ============================================
"""
Labeled Polynomials and the Basis

A labeled polynomial f^[u] is stored as (f, lpp(u)); the module vector u
itself is never tracked. The Basis keeps members in insertion order plus a
divisibility-pruned set of known syzygy signatures.
"""

from collections import defaultdict
from dataclasses import dataclass

from algebra import (
    ModuleOrder,
    Ordering,
    Polynomial,
    Signature,
    compare_signatures,
    monomial_divides,
    signature_mul,
)
from errors import InputError


@dataclass(frozen=True, eq=False)
class LabeledPoly:
    """
    f^[u] with its insertion ordinal.

    ``id`` is the member's position in the basis; -1 marks a syzygy
    pseudo-member standing in for a bare syzygy signature.
    """

    id: int
    poly: Polynomial
    sig: Signature

    @property
    def is_syzygy(self) -> bool:
        return self.poly.is_zero()

    @property
    def lpp(self):
        return self.poly.lpp

    def __repr__(self) -> str:
        kind = "0" if self.is_syzygy else f"lpp={self.poly.lpp.format(self.poly.ring.variables)}"
        return f"<LabeledPoly #{self.id} {kind} sig={self.sig.format(self.poly.ring.variables)}>"


class Basis:
    """
    The growing set G of one run.

    Owned by a single computation; members are never removed and ids are
    their positions in ``members``.
    """

    def __init__(self, inputs, mord: ModuleOrder):
        self.inputs = tuple(inputs)
        self.module_order = mord
        self.members = []
        self._nonzero = []
        self._by_index = defaultdict(list)
        self._syzygies = defaultdict(list)

    @property
    def ring(self):
        return self.inputs[0].ring

    @property
    def next_id(self) -> int:
        return len(self.members)

    @property
    def nonzero_members(self) -> list:
        return self._nonzero

    @property
    def syzygy_members(self) -> list:
        return [g for g in self.members if g.is_syzygy]

    @property
    def syzygy_sigs(self) -> list:
        """The pruned syzygy signatures, grouped by index."""
        return [s for index in sorted(self._syzygies) for s in self._syzygies[index]]

    def members_with_index(self, index: int) -> list:
        return self._by_index.get(index, [])

    def syzygies_with_index(self, index: int) -> list:
        return self._syzygies.get(index, [])

    def append(self, poly: Polynomial, sig: Signature) -> LabeledPoly:
        member = LabeledPoly(self.next_id, poly, sig)
        self.members.append(member)
        self._by_index[sig.index].append(member)
        if not member.is_syzygy:
            self._nonzero.append(member)
        return member

    def add_syzygy_signature(self, sig: Signature) -> bool:
        """
        Insert into the pruned syzygy set.

        Returns:
            False if an existing entry already divides ``sig``
        """
        entries = self._syzygies[sig.index]
        for s in entries:
            if monomial_divides(s.mono, sig.mono):
                return False
        entries[:] = [s for s in entries if not monomial_divides(sig.mono, s.mono)]
        entries.append(sig)
        return True

    def __len__(self) -> int:
        return len(self.members)

    def __repr__(self) -> str:
        return (f"<Basis members={len(self.members)} nonzero={len(self._nonzero)} "
                f"syzygy_sigs={sum(len(v) for v in self._syzygies.values())}>")

# ============================================
# Operations
# ============================================

def syzygy_signature(h: LabeledPoly, i: int, inputs, mord: ModuleOrder) -> Signature | None:
    """
    Signature of the principal syzygy 0^[h e_i - f_i w].

    The two candidate leading terms are lpp(h) e_i and lpp(f_i) lpp(w).
    When they coincide the leading terms may cancel and the signature
    cannot be known from lpp data alone, so nothing is returned.

    Raises:
        InputError: If i is out of range or h is zero
    """
    if not 1 <= i <= len(inputs):
        raise InputError(f"generator index {i} out of range 1..{len(inputs)}")
    if h.is_syzygy:
        raise InputError("principal syzygies need a nonzero polynomial")
    a = Signature(i, h.poly.lpp)
    b = signature_mul(inputs[i - 1].lpp, h.sig)
    if a == b:
        return None
    return a if compare_signatures(a, b, mord) is Ordering.GREATER else b


def init_basis(inputs, mord: ModuleOrder) -> Basis:
    """
    Build the initial set: f_i^[e_i] for every input plus the signatures of
    all principal syzygies f_j e_i - f_i e_j.

    Args:
        inputs: Sequence of nonzero polynomials over one ring
        mord: Module order of the run

    Returns:
        Fresh Basis

    Raises:
        InputError: Empty input, a zero generator, or mixed rings
    """
    inputs = tuple(inputs)
    if not inputs:
        raise InputError("at least one generator is required")
    ring = inputs[0].ring
    for k, f in enumerate(inputs, start=1):
        if f.is_zero():
            raise InputError(f"generator f{k} is zero")
        if f.ring != ring:
            raise InputError(f"generator f{k} lives in {f.ring}, expected {ring}")

    basis = Basis(inputs, mord)
    for k, f in enumerate(inputs, start=1):
        basis.append(f, Signature.unit(k, ring.nvars))

    members = basis.members
    for j in range(len(inputs)):
        for i in range(1, j + 1):
            sig = syzygy_signature(members[j], i, inputs, mord)
            if sig is not None:
                basis.add_syzygy_signature(sig)
    return basis


def record_zero_reduction(basis: Basis, sig: Signature) -> Basis:
    """Register a reduction to zero: prune-insert the signature and append 0^[u]."""
    if sig.is_zero():
        raise InputError("syzygy signature must not be the sentinel")
    basis.add_syzygy_signature(sig)
    basis.append(Polynomial.zero(basis.ring), sig)
    return basis
