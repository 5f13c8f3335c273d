# ============================================
# algebra/signature.py
# ============================================
"""
Signatures

Module monomials x^a e_i and the two module term orders in use:
position-over-term (lower index dominates) and the Schreyer-type order
that compares lpp(x^a f_i) first and breaks ties by index.
"""

from dataclasses import dataclass
from enum import Enum

from errors import InputError
from .monomial import Monomial, Ordering, TermOrder, monomial_divides, monomial_mul


class Signature:
    """x^a e_i with 1-based index i. ``ZERO_SIGNATURE`` is the sentinel."""

    __slots__ = ("index", "mono")

    def __init__(self, index: int, mono: Monomial):
        self.index = index
        self.mono = mono

    @classmethod
    def unit(cls, index: int, nvars: int) -> "Signature":
        return cls(index, Monomial.one(nvars))

    def is_zero(self) -> bool:
        return self.index == 0

    def __eq__(self, other) -> bool:
        return (isinstance(other, Signature)
                and self.index == other.index
                and self.mono == other.mono)

    def __hash__(self) -> int:
        return hash((self.index, self.mono))

    def format(self, names=None) -> str:
        if self.is_zero():
            return "0"
        if self.mono.is_one():
            return f"e{self.index}"
        return f"{self.mono.format(names)}*e{self.index}"

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"Signature({self.format()})"


ZERO_SIGNATURE = Signature(0, None)


def signature_divides(a: Signature, b: Signature) -> bool:
    """True iff a and b share an index and a.mono divides b.mono."""
    if a.index != b.index or a.index == 0:
        return False
    return monomial_divides(a.mono, b.mono)


def signature_mul(t: Monomial, s: Signature) -> Signature:
    if s.is_zero():
        raise InputError("cannot scale the zero signature")
    if t.degree == 0:
        return s
    return Signature(s.index, monomial_mul(t, s.mono))

# ============================================
# Module Orders
# ============================================

class ModuleKind(str, Enum):
    POT = "pot"
    SCHREYER = "schreyer"


_POT_ZERO_KEY = (float("-inf"),)
_SCHREYER_ZERO_KEY = ((float("-inf"),),)


@dataclass(frozen=True, eq=False)
class ModuleOrder:
    """
    Term order on the free module R^m.

    For the Schreyer kind ``leading`` holds lpp(f_1)..lpp(f_m) of the inputs.
    """

    kind: ModuleKind
    base: TermOrder
    leading: tuple = ()

    @classmethod
    def pot(cls, base: TermOrder) -> "ModuleOrder":
        return cls(ModuleKind.POT, base)

    @classmethod
    def schreyer(cls, base: TermOrder, leading) -> "ModuleOrder":
        return cls(ModuleKind.SCHREYER, base, tuple(leading))

    @classmethod
    def create(cls, kind, base: TermOrder, inputs=()) -> "ModuleOrder":
        """Build either kind; Schreyer reads the leading power products of ``inputs``."""
        kind = ModuleKind(kind)
        if kind is ModuleKind.POT:
            return cls.pot(base)
        return cls.schreyer(base, [f.lpp for f in inputs])

    def key(self, s: Signature):
        """Sort key: larger key means larger signature."""
        if self.kind is ModuleKind.POT:
            if s.index == 0:
                return _POT_ZERO_KEY
            return (-s.index, self.base.key(s.mono))
        if s.index == 0:
            return _SCHREYER_ZERO_KEY
        return (self.base.key(monomial_mul(s.mono, self.leading[s.index - 1])), -s.index)

    def __repr__(self) -> str:
        return f"ModuleOrder({self.kind.value}, {self.base.kind.value})"


def compare_signatures(a: Signature, b: Signature, mord: ModuleOrder) -> Ordering:
    """Total order on signatures; the zero sentinel is below everything."""
    return Ordering.of(mord.key(a), mord.key(b))
