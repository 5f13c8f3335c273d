# ============================================
# algebra/field.py
# ============================================
"""
Coefficient Fields

Coefficients are plain Python values: ``int`` residues in [0, p) for a
prime field, ``fractions.Fraction`` for the rationals. The field object
does the arithmetic so polynomials never need to know which one they use.
"""

from dataclasses import dataclass
from fractions import Fraction

from sympy import isprime

from errors import ConfigurationError

MAX_CHARACTERISTIC = 2 ** 31


@dataclass(frozen=True)
class PrimeField:
    """GF(p) with 2 <= p < 2^31."""

    p: int

    def __post_init__(self):
        if not (2 <= self.p < MAX_CHARACTERISTIC) or not isprime(self.p):
            raise ConfigurationError(f"characteristic must be a prime below 2^31, got {self.p}")

    @property
    def characteristic(self) -> int:
        return self.p

    zero = 0
    one = 1

    def __call__(self, value) -> int:
        """Coerce an int or Fraction into the field."""
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ConfigurationError(f"{value} has no image in GF({self.p})")
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        return int(value) % self.p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return a * b % self.p

    def neg(self, a: int) -> int:
        return -a % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroDivisionError("zero has no inverse")
        return pow(a, -1, self.p)

    def div(self, a: int, b: int) -> int:
        return a * self.inv(b) % self.p

    def random_element(self, rng) -> int:
        """Uniform nonzero element."""
        return rng.randrange(1, self.p)

    def __str__(self) -> str:
        return f"GF({self.p})"


@dataclass(frozen=True)
class RationalField:
    """Q with exact, always-normalized Fractions."""

    zero = Fraction(0)
    one = Fraction(1)

    @property
    def characteristic(self) -> int:
        return 0

    def __call__(self, value) -> Fraction:
        return Fraction(value)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        return 1 / Fraction(a)

    def div(self, a, b):
        return Fraction(a) / b

    def random_element(self, rng) -> Fraction:
        value = rng.randint(-9, 9)
        return Fraction(value if value else 1)

    def __str__(self) -> str:
        return "QQ"


def make_field(characteristic: int):
    """
    Build the coefficient field for a characteristic.

    Args:
        characteristic: 0 for the rationals, otherwise a prime below 2^31

    Returns:
        PrimeField or RationalField

    Raises:
        ConfigurationError: If the characteristic is not 0 or a suitable prime
    """
    if characteristic == 0:
        return RationalField()
    return PrimeField(characteristic)
