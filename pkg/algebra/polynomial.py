# ============================================
# algebra/polynomial.py
# ============================================
"""
Polynomials

Sparse term lists kept strictly descending under the ring's term order,
with the subtract-a-multiple step used by every reduction and the classic
(unrestricted) normal form used by the verification oracles.
"""

from dataclasses import dataclass

from errors import ConfigurationError, DimensionError
from .monomial import (
    Monomial,
    TermOrder,
    ZERO_MONOMIAL,
    monomial_divides,
    monomial_mul,
    monomial_quotient,
)


@dataclass(frozen=True)
class PolyRing:
    """Polynomial ring K[x1..xn] with a fixed term order."""

    variables: tuple
    field: object
    order: TermOrder

    @classmethod
    def create(cls, variables, field, order_kind="grevlex") -> "PolyRing":
        variables = tuple(variables)
        return cls(variables, field, TermOrder(order_kind, len(variables)))

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def with_order(self, order_kind) -> "PolyRing":
        return PolyRing(self.variables, self.field, TermOrder(order_kind, self.nvars))

    def with_field(self, field) -> "PolyRing":
        return PolyRing(self.variables, field, self.order)

    def gen(self, name: str) -> "Polynomial":
        """The variable ``name`` as a polynomial."""
        index = self.variables.index(name)
        return Polynomial(self, ((Monomial.variable(index, self.nvars), self.field.one),))

    def __str__(self) -> str:
        return f"{self.field}[{','.join(self.variables)}] ({self.order.kind.value})"


class Polynomial:
    """
    Polynomial as a tuple of (Monomial, coefficient) pairs.

    Invariants: strictly descending monomials, no zero coefficients. The
    zero polynomial is the empty tuple and its lpp is ZERO_MONOMIAL.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms=()):
        # Trusted constructor: terms must already satisfy the invariants
        self.ring = ring
        self.terms = tuple(terms)

    # Factories
    @classmethod
    def zero(cls, ring: PolyRing) -> "Polynomial":
        return cls(ring, ())

    @classmethod
    def constant(cls, ring: PolyRing, value) -> "Polynomial":
        c = ring.field(value)
        if c == 0:
            return cls(ring, ())
        return cls(ring, ((Monomial.one(ring.nvars), c),))

    @classmethod
    def from_terms(cls, ring: PolyRing, items) -> "Polynomial":
        """
        Build a polynomial from arbitrary (monomial, coefficient) pairs.

        Args:
            ring: Target ring
            items: Iterable of (Monomial or exponent tuple, coefficient); repeats are summed

        Returns:
            Normalized Polynomial
        """
        field = ring.field
        acc = {}
        for mono, coeff in items:
            if not isinstance(mono, Monomial):
                mono = Monomial(mono)
            if mono.nvars != ring.nvars:
                raise DimensionError(f"{mono!r} does not belong to {ring}")
            c = field(coeff)
            if mono in acc:
                acc[mono] = field.add(acc[mono], c)
            else:
                acc[mono] = c
        key = ring.order.key
        terms = sorted(((m, c) for m, c in acc.items() if c != 0),
                       key=lambda t: key(t[0]), reverse=True)
        return cls(ring, terms)

    # Properties for clean data access
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def lpp(self):
        """Leading power product (ZERO_MONOMIAL for 0)."""
        return self.terms[0][0] if self.terms else ZERO_MONOMIAL

    @property
    def lc(self):
        """Leading coefficient (0 for the zero polynomial)."""
        return self.terms[0][1] if self.terms else self.ring.field.zero

    @property
    def degree(self) -> int:
        return max((m.degree for m, _ in self.terms), default=-1)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def tail(self) -> "Polynomial":
        return Polynomial(self.ring, self.terms[1:])

    # Arithmetic
    def monic(self) -> "Polynomial":
        if not self.terms or self.lc == self.ring.field.one:
            return self
        field = self.ring.field
        inv = field.inv(self.lc)
        return Polynomial(self.ring, tuple((m, field.mul(c, inv)) for m, c in self.terms))

    def mul_term(self, c, t: Monomial) -> "Polynomial":
        """Return c*t*self; multiplication by a monomial keeps the order."""
        field = self.ring.field
        if c == 0:
            return Polynomial(self.ring, ())
        return Polynomial(self.ring, tuple(
            (monomial_mul(m, t), field.mul(a, c)) for m, a in self.terms
        ))

    def __neg__(self) -> "Polynomial":
        neg = self.ring.field.neg
        return Polynomial(self.ring, tuple((m, neg(c)) for m, c in self.terms))

    def __add__(self, other: "Polynomial") -> "Polynomial":
        return poly_axpy(self, self.ring.field.neg(self.ring.field.one), Monomial.one(self.ring.nvars), other)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return poly_axpy(self, self.ring.field.one, Monomial.one(self.ring.nvars), other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        _check_same_ring(self, other)
        field = self.ring.field
        acc = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = monomial_mul(m1, m2)
                c = field.mul(c1, c2)
                acc[m] = field.add(acc[m], c) if m in acc else c
        key = self.ring.order.key
        terms = sorted(((m, c) for m, c in acc.items() if c != 0),
                       key=lambda t: key(t[0]), reverse=True)
        return Polynomial(self.ring, terms)

    def to_ring(self, ring: PolyRing) -> "Polynomial":
        """Coerce coefficients and re-sort for another field/order on the same variables."""
        if ring == self.ring:
            return self
        if ring.nvars != self.ring.nvars:
            raise DimensionError(f"cannot move {self.ring} polynomial into {ring}")
        return Polynomial.from_terms(ring, self.terms)

    def check_invariants(self):
        """Raise AssertionError if the term list is malformed."""
        key = self.ring.order.key
        previous = None
        for m, c in self.terms:
            if c == 0:
                raise AssertionError(f"zero coefficient at {m!r}")
            k = key(m)
            if previous is not None and not previous > k:
                raise AssertionError(f"terms not strictly descending at {m!r}")
            previous = k

    # Comparison
    def __eq__(self, other) -> bool:
        return (isinstance(other, Polynomial)
                and self.ring.field == other.ring.field
                and self.terms == other.terms)

    def __hash__(self) -> int:
        return hash(self.terms)

    def format(self) -> str:
        if not self.terms:
            return "0"
        names = self.ring.variables
        out = []
        for i, (m, c) in enumerate(self.terms):
            sign = "-" if _is_negative(c, self.ring.field) else "+"
            mag = _magnitude(c, self.ring.field)
            mono = m.format(names)
            if m.is_one():
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if i == 0:
                out.append(body if sign == "+" else f"-{body}")
            else:
                out.append(f" {sign} {body}")
        return "".join(out)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"Polynomial({self.format()})"


def _is_negative(c, field) -> bool:
    if field.characteristic == 0:
        return c < 0
    return c > field.characteristic // 2


def _magnitude(c, field):
    if field.characteristic == 0:
        return abs(c)
    return field.characteristic - c if c > field.characteristic // 2 else c


def _check_same_ring(f: Polynomial, h: Polynomial):
    if f.ring.field != h.ring.field:
        raise ConfigurationError(f"field mismatch: {f.ring.field} vs {h.ring.field}")
    if f.ring.order != h.ring.order:
        raise ConfigurationError(f"order mismatch: {f.ring.order} vs {h.ring.order}")

# ============================================
# Reduction Arithmetic
# ============================================

def poly_axpy(f: Polynomial, c, t: Monomial, h: Polynomial) -> Polynomial:
    """
    Return f - c*t*h as a normalized polynomial.

    Both operands are descending and multiplying by t keeps h descending,
    so this is a single merge pass.

    Args:
        f: Minuend
        c: Coefficient in f's field
        t: Monomial multiplier for h
        h: Subtrahend

    Returns:
        f - c*t*h

    Raises:
        ConfigurationError: If f and h live over different fields/orders
    """
    _check_same_ring(f, h)
    if c == 0 or not h.terms:
        return f
    field = f.ring.field
    key = f.ring.order.key
    sub, mul = field.sub, field.mul

    a = f.terms
    b = [(monomial_mul(m, t), mul(coeff, c)) for m, coeff in h.terms]
    out = []
    i = j = 0
    na, nb = len(a), len(b)
    while i < na and j < nb:
        ma, ca = a[i]
        mb, cb = b[j]
        ka, kb = key(ma), key(mb)
        if ka > kb:
            out.append(a[i])
            i += 1
        elif ka < kb:
            out.append((mb, sub(0, cb)))
            j += 1
        else:
            v = sub(ca, cb)
            if v != 0:
                out.append((ma, v))
            i += 1
            j += 1
    if i < na:
        out.extend(a[i:])
    while j < nb:
        mb, cb = b[j]
        out.append((mb, sub(0, cb)))
        j += 1
    return Polynomial(f.ring, out)


def normal_form(f: Polynomial, G, order: TermOrder | None = None) -> Polynomial:
    """
    Fully reduce f by G with no signature restriction.

    Args:
        f: Polynomial to reduce
        G: Iterable of polynomials (zeros are ignored)
        order: Optional term order; defaults to f's ring order

    Returns:
        Remainder with no term divisible by any lpp(g)
    """
    if order is not None and order != f.ring.order:
        ring = PolyRing(f.ring.variables, f.ring.field, order)
        f = f.to_ring(ring)
        G = [g.to_ring(ring) for g in G]
    divisors = [g for g in G if not g.is_zero()]
    field = f.ring.field
    remainder = []
    p = f
    while p.terms:
        m, c = p.terms[0]
        for g in divisors:
            lead = g.terms[0][0]
            if monomial_divides(lead, m):
                p = poly_axpy(p, field.div(c, g.terms[0][1]), monomial_quotient(m, lead), g)
                break
        else:
            remainder.append((m, c))
            p = p.tail()
    return Polynomial(f.ring, remainder)
