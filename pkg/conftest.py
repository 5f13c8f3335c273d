"""
Shared test fixtures

Rings, the small worked ideal (yz - x, xz - y, xy - z), seeded random
ideals for oracle comparisons, and the --runslow switch for the benchmark
gates.
"""

import random

import pytest
import sympy

from algebra import Monomial, PolyRing, Polynomial, make_field
from ideals import parse_polynomial


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False,
                     help="run benchmark-size tests")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: benchmark-size test, needs --runslow")
    config.addinivalue_line("markers", "property_based: hypothesis property test")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)

# ============================================
# Helpers
# ============================================

def make_ring(names="x,y,z", characteristic=0, order="grevlex") -> PolyRing:
    return PolyRing.create(names.split(","), make_field(characteristic), order)


def polys(ring, *texts):
    return [parse_polynomial(t, ring) for t in texts]


def mono(*exps) -> Monomial:
    return Monomial(exps)


def random_ideal(rng: random.Random, characteristic=101, max_vars=3, max_gens=4, max_degree=3):
    """Seeded random ideal: 2..max_gens nonzero generators in 2..max_vars variables."""
    nvars = rng.randint(2, max_vars)
    ring = make_ring(",".join("xyz"[:nvars]), characteristic)
    count = rng.randint(2, max_gens)
    gens = []
    while len(gens) < count:
        items = []
        for _ in range(rng.randint(1, 4)):
            exps = [0] * nvars
            for _ in range(rng.randint(0, max_degree)):
                exps[rng.randrange(nvars)] += 1
            items.append((tuple(exps), rng.randrange(1, characteristic)))
        f = Polynomial.from_terms(ring, items)
        if not f.is_zero():
            gens.append(f)
    return gens


def lead_exponents(G) -> set:
    return {g.lpp.exponents for g in G}


def sympy_groebner(F):
    """Reduced GB from sympy for the same ring, as (exprs, gens, modulus)."""
    ring = F[0].ring
    gens = sympy.symbols(ring.variables)
    exprs = [sympy.sympify(f.format().replace("^", "**"), locals=dict(zip(ring.variables, gens))) for f in F]
    kwargs = {"order": ring.order.kind.value}
    if ring.field.characteristic:
        kwargs["modulus"] = ring.field.characteristic
    return sympy.groebner(exprs, *gens, **kwargs), gens


def sympy_lead_exponents(G, gens, order) -> set:
    return {sympy.Poly(g, *gens).monoms(order=order)[0] for g in G.exprs}

# ============================================
# Fixtures
# ============================================

@pytest.fixture
def qq_ring():
    return make_ring("x,y,z", 0)


@pytest.fixture
def gf_ring():
    return make_ring("x,y,z", 32003)


@pytest.fixture
def example_inputs(qq_ring):
    """f1 = yz - x, f2 = xz - y, f3 = xy - z over QQ, grevlex."""
    return polys(qq_ring, "y*z - x", "x*z - y", "x*y - z")


@pytest.fixture
def example_inputs_gf(gf_ring):
    return polys(gf_ring, "y*z - x", "x*z - y", "x*y - z")


@pytest.fixture
def example_gb_lpps():
    """Leading exponents of the reduced GB of the worked ideal under grevlex."""
    return {(2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 1), (0, 1, 1), (0, 0, 3)}


@pytest.fixture
def history_db(tmp_path, monkeypatch):
    """Point the run history at a throwaway database."""
    import config
    from models import close_database, init_database

    path = tmp_path / "runs.db"
    monkeypatch.setattr(config, "RESULTS_DB_PATH", path)
    db = init_database(path)
    yield db
    close_database()
