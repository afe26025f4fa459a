"""Graded Hopf data: splitting systems, axiom suites, factorizability."""

import pytest

from qkirby import hopf
from qkirby.cyclotomic import context
from qkirby.sl2 import RESTRICTED, SMALL, TILDE, quantum_group


def split(p, variant):
    return hopf.split_quantum_group(quantum_group(p, variant))


def ungraded(p, variant):
    return hopf.trivial_split(hopf.from_quantum_group(quantum_group(p, variant)))


def test_split_restricted_axioms_exhaustive():
    g = split(2, RESTRICTED)
    assert hopf.check_hopf_axioms(g).ok
    assert hopf.check_unimodular_axioms(g).ok


def test_split_tilde_axioms_exhaustive():
    g = split(2, TILDE)
    assert hopf.check_hopf_axioms(g).ok
    assert hopf.check_ribbon_axioms(g).ok
    assert hopf.check_unimodular_axioms(g).ok


def test_small_ungraded_axioms():
    g = ungraded(2, SMALL)
    assert hopf.check_hopf_axioms(g).ok
    assert hopf.check_ribbon_axioms(g).ok
    assert hopf.check_unimodular_axioms(g).ok


def test_reduced_arity_agrees_on_green_input():
    g = split(2, TILDE)
    full = hopf.check_hopf_axioms(g)
    red = hopf.check_hopf_axioms(g, reduced_arity=True)
    assert full.ok and red.ok
    assert red.checked < full.checked


def test_group_algebra_is_a_known_good_input():
    h = hopf.group_algebra(context(16), 4)
    g = hopf.trivial_split(h)
    assert hopf.check_hopf_axioms(g).ok
    assert hopf.check_ribbon_axioms(g).ok
    assert hopf.check_unimodular_axioms(g).ok
    # cocommutative, so the Drinfeld map collapses onto the unit
    assert not hopf.is_factorizable(h)
    assert hopf.drinfeld_rank(h) == (1, 4)


def test_broken_antipode_is_detected():
    ctx = context(16)
    h = hopf.group_algebra(ctx, 3)
    h.antipode = lambda m: ((m, ctx.one),)  # identity is not an antipode here
    rep = hopf.check_hopf_axioms(hopf.trivial_split(h))
    assert not rep.ok
    assert any(axiom == "antipode" for axiom, _ in rep.failures)


def test_broken_idempotents_are_rejected():
    h = hopf.from_quantum_group(quantum_group(2, RESTRICTED))
    group = hopf.FiniteAbelianGroup((2,))
    bad = {(0,): h.unit, (1,): h.unit}
    with pytest.raises(hopf.NotASplittingSystem):
        hopf.split(h, group, bad)
    with pytest.raises(hopf.DimensionMismatch):
        hopf.split(h, group, {(0,): h.unit})


def test_direct_sum_round_trip():
    g = split(2, TILDE)
    h = g.H
    total = hopf.direct_sum(g)
    for m in h.basis:
        assert dict(total.mul(m, h.basis[1])) == dict(h.mul(m, h.basis[1]))
        assert dict(total.delta(m)) == dict(h.delta(m))
        assert total.counit(m) == h.counit(m)
        assert dict(total.antipode(m)) == dict(h.antipode(m))


def test_component_dimensions():
    g = split(2, RESTRICTED)
    for alpha in g.group.elements():
        assert len(g.component(alpha)) == len(g.H.basis) // 2


def test_factorizability():
    # the restricted variant is factorizable; the small one at even p is not
    assert hopf.is_factorizable(hopf.from_quantum_group(quantum_group(2, RESTRICTED)))
    assert not hopf.is_factorizable(hopf.from_quantum_group(quantum_group(2, SMALL)))
    assert hopf.is_factorizable(hopf.from_quantum_group(quantum_group(3, SMALL)))


def test_drinfeld_rank_bounds():
    rank, n = hopf.drinfeld_rank(hopf.from_quantum_group(quantum_group(2, SMALL)))
    assert n == 8
    assert 0 < rank < n


def test_axiom_report_summary():
    rep = hopf.AxiomReport("demo")
    rep.record("a", (), True)
    rep.record("b", (0,), False)
    assert not rep.ok
    assert "FAILED (1)" in rep.summary()
