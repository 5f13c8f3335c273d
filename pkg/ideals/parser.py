# ============================================
# ideals/parser.py
# ============================================
"""
Ideal File Format

Line-oriented text format:

    # Example ideal
    ring: x,y,z
    char: 0
    order: grevlex
    poly: y*z - x
    poly: x*z - y
    poly: x*y - z

The three header lines must come before the first poly line. Expressions
use integers, variable names, + - * ^, parentheses and explicit ``*``;
``/`` is only allowed before an integer (so rational coefficients such as
``1/2*x`` survive a render/parse cycle).
"""

import re
from dataclasses import dataclass, field
from pathlib import Path

from algebra import MAX_EXPONENT, Monomial, OrderKind, PolyRing, Polynomial, make_field
from errors import (
    CharacteristicError,
    ConfigurationError,
    ExponentOverflowError,
    MalformedTokenError,
    MissingHeaderError,
    ParseError,
    UnknownVariableError,
)

HEADERS = ("ring", "char", "order")

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
_DIGITS = re.compile(r"[0-9]+")
_TOKEN = re.compile(r"\s*(?:([0-9]+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


@dataclass
class IdealFile:
    """A parsed (or generated) ideal with the ring it lives in."""

    variables: tuple
    characteristic: int
    order: str
    polynomials: list = field(default_factory=list)
    label: str = ""

    @property
    def ring(self) -> PolyRing:
        return PolyRing.create(self.variables, make_field(self.characteristic), self.order)

    def __len__(self) -> int:
        return len(self.polynomials)

# ============================================
# Expressions
# ============================================

def _tokenize(text: str, line: int | None) -> list:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        number, name, symbol = m.groups()
        pos = m.end()
        if number is not None:
            tokens.append(("int", int(number)))
        elif name is not None:
            tokens.append(("name", name))
        elif symbol in "+-*/^()":
            tokens.append(("op", symbol))
        elif not symbol.isspace():
            raise MalformedTokenError(f"unexpected character {symbol!r}", line)
    return tokens


class _ExpressionParser:
    """Recursive descent over the token list; builds polynomials in ``ring``."""

    def __init__(self, tokens: list, ring: PolyRing, line: int | None):
        self.tokens = tokens
        self.pos = 0
        self.ring = ring
        self.line = line

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self):
        token = self.peek()
        self.pos += 1
        return token

    def expect_int(self) -> int:
        kind, value = self.take()
        if kind != "int":
            raise MalformedTokenError(f"expected an integer, got {value!r}", self.line)
        return value

    def parse(self) -> Polynomial:
        if not self.tokens:
            raise MalformedTokenError("empty expression", self.line)
        poly = self.expr()
        if self.pos != len(self.tokens):
            raise MalformedTokenError(f"unexpected token {self.peek()[1]!r}", self.line)
        return poly

    def expr(self) -> Polynomial:
        poly = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            poly = poly + rhs if op == "+" else poly - rhs
        return poly

    def term(self) -> Polynomial:
        poly = self.unary()
        while self.peek() in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            if op == "*":
                poly = poly * self.unary()
                continue
            divisor = self.expect_int()
            if divisor == 0 or self.ring.field(divisor) == 0:
                raise MalformedTokenError("division by zero", self.line)
            field_ = self.ring.field
            poly = poly.mul_term(field_.inv(field_(divisor)), Monomial.one(self.ring.nvars))
        return poly

    def unary(self) -> Polynomial:
        if self.peek() == ("op", "-"):
            self.take()
            return -self.unary()
        if self.peek() == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        if self.peek() != ("op", "^"):
            return base
        self.take()
        exponent = self.expect_int()
        if exponent > MAX_EXPONENT:
            raise MalformedTokenError(f"exponent {exponent} exceeds {MAX_EXPONENT}", self.line)
        result = Polynomial.constant(self.ring, 1)
        for _ in range(exponent):
            result = result * base
        return result

    def atom(self) -> Polynomial:
        kind, value = self.take()
        if kind == "int":
            return Polynomial.constant(self.ring, value)
        if kind == "name":
            if value not in self.ring.variables:
                raise UnknownVariableError(f"unknown variable {value!r}", self.line)
            return self.ring.gen(value)
        if (kind, value) == ("op", "("):
            inner = self.expr()
            if self.take() != ("op", ")"):
                raise MalformedTokenError("missing ')'", self.line)
            return inner
        if kind is None:
            raise MalformedTokenError("unexpected end of expression", self.line)
        raise MalformedTokenError(f"unexpected token {value!r}", self.line)


def parse_polynomial(text: str, ring: PolyRing, line: int | None = None) -> Polynomial:
    """
    Parse one expression into a polynomial of ``ring``.

    Raises:
        UnknownVariableError: Name not in the ring
        MalformedTokenError: Anything else that does not fit the grammar,
            including exponents past the monomial limit
    """
    try:
        return _ExpressionParser(_tokenize(text, line), ring, line).parse()
    except ExponentOverflowError as e:
        raise MalformedTokenError(str(e), line) from e

# ============================================
# Files
# ============================================

def _parse_variables(value: str, line: int) -> tuple:
    names = tuple(v.strip() for v in value.split(","))
    for name in names:
        if not _NAME.match(name):
            raise MalformedTokenError(f"bad variable name {name!r}", line)
    if len(set(names)) != len(names):
        raise MalformedTokenError("duplicate variable name", line)
    return names


def _parse_characteristic(value: str, line: int) -> int:
    if not _DIGITS.fullmatch(value):
        raise MalformedTokenError(f"characteristic must be a non-negative integer, got {value!r}", line)
    char = int(value)
    try:
        make_field(char)
    except ConfigurationError as e:
        raise CharacteristicError(str(e), line) from e
    return char


def _parse_order(value: str, line: int) -> str:
    try:
        return OrderKind(value).value
    except ValueError:
        raise MalformedTokenError(f"unknown term order {value!r}", line) from None


def parse_ideal_file(text: str, label: str = "") -> IdealFile:
    """
    Parse an ideal file.

    Args:
        text: File contents
        label: Name reported in run records (usually the file name)

    Returns:
        IdealFile with parsed polynomials

    Raises:
        ParseError: One of its subclasses, always with the offending line number
    """
    header = {}
    ring = None
    polys = []
    last_line = 0

    for number, raw in enumerate(text.splitlines(), start=1):
        last_line = number
        content = raw.split("#", 1)[0].strip()
        if not content:
            continue
        key, sep, value = content.partition(":")
        key, value = key.strip().lower(), value.strip()
        if not sep:
            raise MalformedTokenError(f"expected 'key: value', got {content!r}", number)

        if key in HEADERS:
            if key in header:
                raise MalformedTokenError(f"duplicate {key} line", number)
            if ring is not None:
                raise MalformedTokenError(f"{key} line after the first poly line", number)
            if key == "ring":
                header[key] = _parse_variables(value, number)
            elif key == "char":
                header[key] = _parse_characteristic(value, number)
            else:
                header[key] = _parse_order(value, number)
        elif key == "poly":
            if ring is None:
                missing = [h for h in HEADERS if h not in header]
                if missing:
                    raise MissingHeaderError(f"missing {', '.join(missing)} line before poly", number)
                ring = PolyRing.create(header["ring"], make_field(header["char"]), header["order"])
            poly = parse_polynomial(value, ring, number)
            if poly.is_zero():
                raise MalformedTokenError("generator is zero", number)
            polys.append(poly)
        else:
            raise MalformedTokenError(f"unknown line type {key!r}", number)

    if not polys:
        missing = [h for h in HEADERS if h not in header]
        what = f"{', '.join(missing)} line" if missing else "poly line"
        raise MissingHeaderError(f"missing {what}", last_line or 1)

    return IdealFile(header["ring"], header["char"], header["order"], polys, label)


def render_ideal_file(ideal: IdealFile) -> str:
    """Text form of an ideal; parse_ideal_file(render_ideal_file(x)) gives x back."""
    lines = []
    if ideal.label:
        lines.append(f"# {ideal.label}")
    lines.append(f"ring: {','.join(ideal.variables)}")
    lines.append(f"char: {ideal.characteristic}")
    lines.append(f"order: {ideal.order}")
    lines.extend(f"poly: {p.format()}" for p in ideal.polynomials)
    return "\n".join(lines) + "\n"


def read_ideal_file(path) -> IdealFile:
    """Read and parse a file; the file name becomes the label."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e.strerror or e}") from e
    return parse_ideal_file(text, label=path.name)

