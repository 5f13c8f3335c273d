# ============================================
# ideals/generators.py
# ============================================
"""
Benchmark Ideals

Katsura-n and Cyclic-n, plus the ``name:N`` bench strings used on the
command line.
"""

import config
from algebra import Monomial, PolyRing, Polynomial, make_field
from errors import InputError
from .parser import IdealFile

# ============================================
# Katsura
# ============================================

def gen_katsura(n: int, characteristic: int = config.DEFAULT_CHARACTERISTIC,
                order: str = config.DEFAULT_TERM_ORDER) -> IdealFile:
    """
    Katsura-n in n+1 variables u0..un.

    For m = 0..n-1: sum over i = -n..n of u_|i| * u_|m-i| minus u_m
    (indices above n contribute nothing), then the linear relation
    u0 + 2*(u1 + ... + un) - 1.

    Raises:
        InputError: If n < 2
    """
    if n < 2:
        raise InputError(f"Katsura needs n >= 2, got {n}")
    names = tuple(f"u{i}" for i in range(n + 1))
    ring = PolyRing.create(names, make_field(characteristic), order)
    nvars = n + 1

    def var(i: int) -> Monomial:
        return Monomial.variable(i, nvars)

    polys = []
    for m in range(n):
        items = []
        for i in range(-n, n + 1):
            a, b = abs(i), abs(m - i)
            if b > n:
                continue
            items.append((var(a) * var(b), 1))
        items.append((var(m), -1))
        polys.append(Polynomial.from_terms(ring, items))

    linear = [(var(0), 1)] + [(var(i), 2) for i in range(1, nvars)] + [(Monomial.one(nvars), -1)]
    polys.append(Polynomial.from_terms(ring, linear))
    return IdealFile(names, characteristic, ring.order.kind.value, polys, f"katsura{n}")

# ============================================
# Cyclic
# ============================================

def gen_cyclic(n: int, characteristic: int = config.DEFAULT_CHARACTERISTIC,
               order: str = config.DEFAULT_TERM_ORDER) -> IdealFile:
    """
    Cyclic-n in x1..xn: the cyclic sums of products of d consecutive
    variables for d = 1..n-1, then x1*...*xn - 1.

    Raises:
        InputError: If n < 2
    """
    if n < 2:
        raise InputError(f"Cyclic needs n >= 2, got {n}")
    names = tuple(f"x{i}" for i in range(1, n + 1))
    ring = PolyRing.create(names, make_field(characteristic), order)

    polys = []
    for d in range(1, n):
        items = []
        for i in range(n):
            exps = [0] * n
            for j in range(d):
                exps[(i + j) % n] += 1
            items.append((tuple(exps), 1))
        polys.append(Polynomial.from_terms(ring, items))
    polys.append(Polynomial.from_terms(ring, [((1,) * n, 1), ((0,) * n, -1)]))
    return IdealFile(names, characteristic, ring.order.kind.value, polys, f"cyclic{n}")

# ============================================
# Bench Specs
# ============================================

GENERATORS = {
    "katsura": gen_katsura,
    "cyclic": gen_cyclic,
}


def parse_bench(bench: str, characteristic: int = config.DEFAULT_CHARACTERISTIC,
                order: str = config.DEFAULT_TERM_ORDER) -> IdealFile:
    """
    Build a benchmark ideal from ``katsura:N`` or ``cyclic:N``.

    Raises:
        InputError: Unknown family or bad N
    """
    family, sep, size = bench.partition(":")
    family = family.strip().lower()
    if not sep or family not in GENERATORS:
        raise InputError(f"bench must look like katsura:N or cyclic:N, got {bench!r}")
    try:
        n = int(size)
    except ValueError:
        raise InputError(f"bench size must be an integer, got {size!r}") from None
    return GENERATORS[family](n, characteristic, order)
