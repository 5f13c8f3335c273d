# ============================================
# verify/sampling.py
# ============================================
"""
Labeled Groebner Basis Sampling

The labeled-GB property quantifies over every module vector u, so it is
checked on seeded random sparse vectors instead: for f = u.F != 0 some
nonzero member g with t = lpp(f)/lpp(g) must satisfy t*sig(g) <= lpp(u).
"""

import logging
import random
from dataclasses import dataclass, field

import config
from algebra import (
    ModuleOrder,
    Monomial,
    Ordering,
    Polynomial,
    Signature,
    compare_signatures,
    monomial_divides,
    monomial_quotient,
    signature_divides,
    signature_mul,
)
from engine import Basis

logger = logging.getLogger(__name__)


@dataclass
class VerificationReport:
    """Outcome of one batch of checks; ``failures`` holds a line per failed check."""

    attempted: int = 0
    passed: int = 0
    skipped: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.passed == self.attempted

    def record(self, ok: bool, diagnostic: str = ""):
        self.attempted += 1
        if ok:
            self.passed += 1
        else:
            self.failures.append(diagnostic)

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        return VerificationReport(
            self.attempted + other.attempted,
            self.passed + other.passed,
            self.skipped + other.skipped,
            self.failures + other.failures,
        )

    def __str__(self) -> str:
        return f"{self.passed}/{self.attempted} passed ({self.skipped} skipped)"

# ============================================
# Module Vectors
# ============================================

def _random_monomial(rng: random.Random, nvars: int, max_degree: int) -> Monomial:
    exps = [0] * nvars
    for _ in range(rng.randint(0, max_degree)):
        exps[rng.randrange(nvars)] += 1
    return Monomial(exps)


def random_module_vector(rng: random.Random, ring, m: int,
                         max_degree: int = config.SAMPLE_MAX_DEGREE,
                         max_components: int = config.SAMPLE_MAX_COMPONENTS) -> dict:
    """
    Sparse random u in R^m as {index: nonzero Polynomial}.

    Between one and ``max_components`` components are nonzero, each with
    one to three terms of degree at most ``max_degree``.
    """
    count = rng.randint(1, min(m, max_components))
    u = {}
    for i in sorted(rng.sample(range(1, m + 1), count)):
        items = [(_random_monomial(rng, ring.nvars, max_degree), ring.field.random_element(rng))
                 for _ in range(rng.randint(1, 3))]
        poly = Polynomial.from_terms(ring, items)
        if not poly.is_zero():
            u[i] = poly
    return u


def module_lead(u: dict, mord: ModuleOrder) -> Signature:
    """lpp(u): the largest module monomial t*e_i over all components."""
    candidates = [Signature(i, p.lpp) for i, p in u.items()]
    return max(candidates, key=mord.key)


def module_apply(u: dict, inputs) -> Polynomial:
    """u . F = sum of u_i * f_i."""
    total = Polynomial.zero(inputs[0].ring)
    for i, p in u.items():
        total = total + p * inputs[i - 1]
    return total

# ============================================
# Checks
# ============================================

def covering_member(f: Polynomial, sig: Signature, basis: Basis):
    """
    Nonzero member g covering f: lpp(g) | lpp(f) and the scaled signature
    of g does not exceed ``sig``. None if there is none.
    """
    mord = basis.module_order
    for g in basis.nonzero_members:
        if not monomial_divides(g.poly.lpp, f.lpp):
            continue
        t = monomial_quotient(f.lpp, g.poly.lpp)
        if compare_signatures(signature_mul(t, g.sig), sig, mord) is not Ordering.GREATER:
            return g
    return None


def check_labeled_gb(basis: Basis, inputs=None, samples: int = config.LABELED_SAMPLES,
                     seed: int = config.DEFAULT_SEED, mord: ModuleOrder | None = None,
                     max_degree: int = config.SAMPLE_MAX_DEGREE,
                     max_components: int = config.SAMPLE_MAX_COMPONENTS) -> VerificationReport:
    """
    Sample the labeled-GB covering condition.

    Args:
        basis: Basis produced by agc_run
        inputs: Generators F (defaults to the basis inputs)
        samples: Number of random module vectors to draw
        seed: Seed of the generator
        mord: Module order (defaults to the basis order)

    Returns:
        VerificationReport; every failure names the offending u
    """
    inputs = list(inputs) if inputs is not None else list(basis.inputs)
    mord = mord or basis.module_order
    ring = inputs[0].ring
    names = ring.variables
    rng = random.Random(seed)
    report = VerificationReport()

    for _ in range(samples):
        u = random_module_vector(rng, ring, len(inputs), max_degree, max_components)
        if not u:
            report.skipped += 1
            continue
        f = module_apply(u, inputs)
        if f.is_zero():
            report.skipped += 1
            continue
        lead = module_lead(u, mord)
        ok = covering_member(f, lead, basis) is not None
        report.record(ok, "" if ok else (
            "u = (" + ", ".join(f"e{i}: {p}" for i, p in u.items()) + f"), "
            f"lpp(f) = {f.lpp.format(names)}, lpp(u) = {lead.format(names)} not covered"
        ))

    if report.failures:
        logger.warning(f"⚠️ Labeled GB sampling: {len(report.failures)} failures out of {report.attempted}")
    return report


def check_principal_syzygies(basis: Basis) -> VerificationReport:
    """
    Build f_j e_i - f_i e_j for every i < j, confirm it maps to zero and
    that its leading module term is covered by a known syzygy signature.
    """
    inputs = basis.inputs
    mord = basis.module_order
    known = basis.syzygy_sigs + [g.sig for g in basis.syzygy_members]
    report = VerificationReport()

    for j in range(2, len(inputs) + 1):
        for i in range(1, j):
            u = {i: inputs[j - 1], j: -inputs[i - 1]}
            vanishes = module_apply(u, inputs).is_zero()
            lead = module_lead(u, mord)
            covered = any(signature_divides(s, lead) for s in known)
            report.record(vanishes and covered,
                          f"f{j}*e{i} - f{i}*e{j}: vanishes={vanishes}, lead {lead} covered={covered}")
    return report
