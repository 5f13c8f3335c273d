"""
Test labeled polynomials, the basis and principal syzygy signatures
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from algebra import ModuleOrder, Monomial, Signature, signature_divides
from conftest import make_ring, mono, polys
from engine import LabeledPoly, init_basis, record_zero_reduction, syzygy_signature
from errors import InputError


def sig(index, *exps):
    return Signature(index, mono(*exps))


@pytest.fixture
def pot(example_inputs):
    return ModuleOrder.create("pot", example_inputs[0].ring.order, example_inputs)


def test_init_basis_members_and_syzygies(example_inputs, pot):
    basis = init_basis(example_inputs, pot)
    assert [g.sig for g in basis.members] == [Signature.unit(i, 3) for i in (1, 2, 3)]
    assert [g.id for g in basis.members] == [0, 1, 2]
    assert {sig(1, 1, 0, 1), sig(1, 1, 1, 0), sig(2, 1, 1, 0)} <= set(basis.syzygy_sigs)
    assert not basis.syzygy_members


def test_init_basis_single_input(qq_ring):
    basis = init_basis(polys(qq_ring, "x^2 - y"), ModuleOrder.pot(qq_ring.order))
    assert len(basis) == 1
    assert basis.syzygy_sigs == []


def test_init_basis_identical_inputs(qq_ring):
    f, = polys(qq_ring, "x*y - z")
    basis = init_basis([f, f], ModuleOrder.pot(qq_ring.order))
    # f*e1 - f*e2: under POT the e1 component leads
    assert basis.syzygy_sigs == [sig(1, 1, 1, 0)]


def test_init_basis_rejects_bad_input(qq_ring, gf_ring):
    pot = ModuleOrder.pot(qq_ring.order)
    with pytest.raises(InputError):
        init_basis([], pot)
    f, = polys(qq_ring, "x")
    with pytest.raises(InputError):
        init_basis([f, f - f], pot)
    g, = polys(gf_ring, "y")
    with pytest.raises(InputError):
        init_basis([f, g], pot)


def test_syzygy_signature_examples(example_inputs, pot):
    basis = init_basis(example_inputs, pot)
    f1 = basis.members[0]
    # candidates yz*e2 and xz*e1; index 1 wins under POT
    assert syzygy_signature(f1, 2, example_inputs, pot) == sig(1, 1, 0, 1)
    with pytest.raises(InputError):
        syzygy_signature(f1, 4, example_inputs, pot)
    with pytest.raises(InputError):
        syzygy_signature(f1, 0, example_inputs, pot)


def test_syzygy_signature_same_index(example_inputs, pot):
    ring = example_inputs[0].ring
    h = LabeledPoly(5, polys(ring, "x^2 + z")[0], sig(1, 0, 0, 1))
    # x^2*e1 against lpp(f1)*z*e1 = yz^2*e1: same index, compare x^2 with yz^2
    assert syzygy_signature(h, 1, example_inputs, pot) == sig(1, 0, 1, 2)


def test_syzygy_signature_skips_ties(example_inputs, pot):
    # lpp(h)*e1 == lpp(f1)*sig(h) when lpp(h) = yz and sig(h) = e1
    ring = example_inputs[0].ring
    h = LabeledPoly(7, polys(ring, "y*z + 1")[0], Signature.unit(1, 3))
    assert syzygy_signature(h, 1, example_inputs, pot) is None


def test_record_zero_reduction_pruning(example_inputs, pot):
    basis = init_basis(example_inputs[:1], pot)
    record_zero_reduction(basis, sig(1, 1, 1, 1))
    assert basis.syzygy_sigs == [sig(1, 1, 1, 1)]
    record_zero_reduction(basis, sig(1, 1, 0, 1))
    assert basis.syzygy_sigs == [sig(1, 1, 0, 1)]
    record_zero_reduction(basis, sig(1, 2, 1, 1))
    assert basis.syzygy_sigs == [sig(1, 1, 0, 1)]
    # every zero reduction is also a member
    assert [g.id for g in basis.syzygy_members] == [1, 2, 3]
    assert all(g.is_syzygy for g in basis.syzygy_members)


def test_record_zero_reduction_rejects_sentinel(example_inputs, pot):
    from algebra import ZERO_SIGNATURE

    basis = init_basis(example_inputs, pot)
    with pytest.raises(InputError):
        record_zero_reduction(basis, ZERO_SIGNATURE)


@pytest.mark.property_based
@given(st.lists(st.tuples(st.integers(1, 2), st.tuples(*[st.integers(0, 3)] * 3)), max_size=30))
@settings(max_examples=100)
def test_syzygy_signatures_stay_an_antichain(entries):
    ring = make_ring("x,y,z", 101)
    inputs = polys(ring, "x + 1", "y + 1")
    basis = init_basis(inputs, ModuleOrder.pot(ring.order))
    inserted = []
    for index, exps in entries:
        s = Signature(index, Monomial(exps))
        basis.add_syzygy_signature(s)
        inserted.append(s)

    sigs = basis.syzygy_sigs
    for a in sigs:
        for b in sigs:
            assert a is b or not signature_divides(a, b)
    # nothing that was inserted is lost: some entry still divides it
    for s in inserted:
        assert any(signature_divides(t, s) for t in sigs)
