# ============================================
# algebra/monomial.py
# ============================================
"""
Monomials and Term Orders

A Monomial is an exponent vector with its total degree cached. Term orders
are expressed as sort keys: a larger key means a larger monomial, so every
comparison in the engine is a tuple comparison.
"""

from enum import Enum

from errors import DimensionError, ExponentOverflowError, NotDivisibleError

# Exponents are stored as 16-bit unsigned integers
MAX_EXPONENT = 0xFFFF


class Ordering(Enum):
    """Result of comparing two elements of a (partial) order."""

    LESS = -1
    EQUAL = 0
    GREATER = 1
    INCOMPARABLE = None

    @classmethod
    def of(cls, a, b) -> "Ordering":
        """Compare two sort keys."""
        if a < b:
            return cls.LESS
        if a > b:
            return cls.GREATER
        return cls.EQUAL


class Monomial:
    """
    Power product x^a with cached total degree.

    Instances are immutable; the private key cache only memoizes term-order
    keys and never changes the value.
    """

    __slots__ = ("exponents", "degree", "_keys")

    def __init__(self, exponents):
        exponents = tuple(exponents)
        for e in exponents:
            if e < 0:
                raise ValueError(f"negative exponent in {exponents}")
            if e > MAX_EXPONENT:
                raise ExponentOverflowError(f"exponent {e} exceeds {MAX_EXPONENT}")
        self.exponents = exponents
        self.degree = sum(exponents)
        self._keys = {}

    @classmethod
    def _trusted(cls, exponents: tuple, degree: int) -> "Monomial":
        # Skips validation; callers have already checked the bounds
        m = cls.__new__(cls)
        m.exponents = exponents
        m.degree = degree
        m._keys = {}
        return m

    @classmethod
    def one(cls, nvars: int) -> "Monomial":
        return cls._trusted((0,) * nvars, 0)

    @classmethod
    def variable(cls, index: int, nvars: int) -> "Monomial":
        exps = [0] * nvars
        exps[index] = 1
        return cls._trusted(tuple(exps), 1)

    @property
    def nvars(self) -> int:
        return len(self.exponents)

    def is_one(self) -> bool:
        return self.degree == 0

    def divides(self, other: "Monomial") -> bool:
        return monomial_divides(self, other)

    def __mul__(self, other: "Monomial") -> "Monomial":
        return monomial_mul(self, other)

    def __eq__(self, other) -> bool:
        return isinstance(other, Monomial) and self.exponents == other.exponents

    def __hash__(self) -> int:
        return hash(self.exponents)

    def format(self, names=None) -> str:
        """Render as ``x^2*y`` style text."""
        if self.degree == 0:
            return "1"
        names = names or [f"x{i}" for i in range(self.nvars)]
        parts = []
        for name, e in zip(names, self.exponents):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts)

    def __repr__(self) -> str:
        return f"Monomial({self.exponents})"


class _ZeroMonomial:
    """lpp(0): below every monomial under every order."""

    __slots__ = ()
    degree = -1
    exponents = None

    def divides(self, other) -> bool:
        return False

    def __repr__(self) -> str:
        return "ZERO_MONOMIAL"


ZERO_MONOMIAL = _ZeroMonomial()

# ============================================
# Monomial Arithmetic
# ============================================

def _check_lengths(a, b):
    if len(a.exponents) != len(b.exponents):
        raise DimensionError(f"monomials over {len(a.exponents)} and {len(b.exponents)} variables")


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    _check_lengths(a, b)
    exps = tuple(x + y for x, y in zip(a.exponents, b.exponents))
    for e in exps:
        if e > MAX_EXPONENT:
            raise ExponentOverflowError(f"exponent {e} exceeds {MAX_EXPONENT}")
    return Monomial._trusted(exps, a.degree + b.degree)


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    """True iff a divides b componentwise."""
    if a.degree > b.degree:
        return False
    for x, y in zip(a.exponents, b.exponents):
        if x > y:
            return False
    return True


def monomial_quotient(a: Monomial, b: Monomial) -> Monomial:
    """
    Return a / b.

    Raises:
        NotDivisibleError: If b does not divide a
    """
    _check_lengths(a, b)
    if not monomial_divides(b, a):
        raise NotDivisibleError(f"{b.exponents} does not divide {a.exponents}")
    return Monomial._trusted(
        tuple(x - y for x, y in zip(a.exponents, b.exponents)),
        a.degree - b.degree,
    )


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    _check_lengths(a, b)
    exps = tuple(max(x, y) for x, y in zip(a.exponents, b.exponents))
    return Monomial._trusted(exps, sum(exps))

# ============================================
# Term Orders
# ============================================

class OrderKind(str, Enum):
    GREVLEX = "grevlex"
    LEX = "lex"
    GRLEX = "grlex"


# Key of the zero-monomial sentinel; real keys all start with a value >= 0
_ZERO_KEY = (-1,)


class TermOrder:
    """
    Monomial order on a fixed number of variables (x1 > x2 > ... > xn).

    ``key(m)`` maps a monomial to a tuple whose natural ordering is the
    term order; keys are memoized on the monomial.
    """

    __slots__ = ("kind", "nvars", "_make_key")

    def __init__(self, kind, nvars: int):
        self.kind = OrderKind(kind)
        self.nvars = nvars
        if self.kind is OrderKind.GREVLEX:
            self._make_key = lambda e, d: (d, tuple(-x for x in reversed(e)))
        elif self.kind is OrderKind.GRLEX:
            self._make_key = lambda e, d: (d, e)
        else:
            self._make_key = lambda e, d: e

    def key(self, m):
        if m is ZERO_MONOMIAL:
            return _ZERO_KEY
        k = m._keys.get(self.kind)
        if k is None:
            k = self._make_key(m.exponents, m.degree)
            m._keys[self.kind] = k
        return k

    def __eq__(self, other) -> bool:
        return isinstance(other, TermOrder) and (self.kind, self.nvars) == (other.kind, other.nvars)

    def __hash__(self) -> int:
        return hash((self.kind, self.nvars))

    def __repr__(self) -> str:
        return f"TermOrder({self.kind.value}, {self.nvars})"


def compare_monomials(a, b, order: TermOrder) -> Ordering:
    """
    Compare two monomials (or the zero-monomial sentinel) under ``order``.

    Raises:
        DimensionError: If either monomial does not match the order's variable count
    """
    for m in (a, b):
        if m is not ZERO_MONOMIAL and len(m.exponents) != order.nvars:
            raise DimensionError(f"{m!r} does not have {order.nvars} variables")
    return Ordering.of(order.key(a), order.key(b))
