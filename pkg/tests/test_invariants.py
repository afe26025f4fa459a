"""High-level invariants: dispatch, boundary values, decomposition."""

import pytest

from qkirby import corpus
from qkirby import diagrams as dg
from qkirby.cyclotomic import named_constants, parse
from qkirby.invariants import (
    NotCharacteristic,
    NotEven,
    StructureKindMismatch,
    VerificationFailure,
    ZeroScale,
    boundary_invariant,
    decomposition_check,
    invariant,
    rescale_check,
    stabilization_identity,
    unrefined_paths,
    valid_labelings,
)
from qkirby.sl2 import ParityUnsupported


def test_unrefined_two_paths_agree_on_corpus():
    for name in ("unknot0", "kink_plus", "hopf00", "dot_cancel",
                 "dot_double", "kinks_pm"):
        direct, summed = unrefined_paths(corpus.diagram(name), 2)
        assert direct == summed, name


def test_invariant_dispatch_errors():
    d = corpus.diagram("hopf00")
    with pytest.raises(ParityUnsupported):
        invariant(d, 3, mode="refined")
    with pytest.raises(ValueError):
        invariant(d, 2, variant="spam")
    with pytest.raises(ValueError):
        invariant(d, 2, mode="spam")
    with pytest.raises(ValueError):
        invariant(d, 2, variant="small", mode="refined")
    with pytest.raises(ValueError):
        invariant(d, 1)


def test_odd_p_unrefined_regression():
    got = invariant(corpus.diagram("hopf00"), 3, mode="unrefined")
    assert got == parse("1 [N=24]")


def test_small_variant_on_twisted_bundle():
    got = invariant(corpus.diagram("hopf01"), 2, variant="small",
                    mode="unrefined")
    assert got == parse("1 [N=16]")


def test_boundary_invariant_blowup_invariance_spin():
    # +1-framed unknot: a blow-up of the empty diagram, so the normalized
    # boundary invariant of S^3 with its unique spin structure is 1
    one = named_constants(4).ctx.one
    kp = corpus.diagram("kink_plus")
    assert boundary_invariant(kp, (1,), 4) == one
    both = dg.disjoint_union(kp, corpus.diagram("kink_minus"))
    assert boundary_invariant(both, (1, 1), 4) == one


def test_boundary_invariant_slide_invariance_coh():
    # hopf20 is a handle slide of hopf00; same boundary, same structure
    a = boundary_invariant(corpus.diagram("hopf00"), (0, 0), 2)
    b = boundary_invariant(corpus.diagram("hopf20"), (0, 0), 2)
    assert a == b


def test_boundary_invariant_trades_dotted_diagrams():
    # a canceling pair presents B^4, so the boundary is S^3 again
    one = named_constants(2).ctx.one
    d = corpus.diagram("dot_cancel")
    tr = dg.trade_handles(d)
    assert tr.diagram.n_components == 2
    assert boundary_invariant(d, (0, 0), 2) == one


def test_boundary_invariant_structure_errors():
    kp = corpus.diagram("kink_plus")
    with pytest.raises(NotCharacteristic):
        boundary_invariant(kp, (0,), 4)
    with pytest.raises(NotEven):
        boundary_invariant(kp, (1,), 2)
    with pytest.raises(StructureKindMismatch):
        boundary_invariant(kp, (1,), 2, kind="spin")
    with pytest.raises(StructureKindMismatch):
        boundary_invariant(kp, (1,), 4, kind="coh")
    with pytest.raises(ValueError):
        boundary_invariant(corpus.diagram("hopf00"), (0,), 2)
    with pytest.raises(ParityUnsupported):
        boundary_invariant(kp, (1,), 3)


def test_decomposition_check_on_samples():
    for name, p in (("kink_plus", 2), ("dot_double", 2), ("kink_plus", 4)):
        rep = decomposition_check(corpus.diagram(name), p)
        assert rep.ok, (name, p, rep.failures)
    with pytest.raises(ParityUnsupported):
        decomposition_check(corpus.diagram("unknot0"), 3)


def test_rescale_check_and_zero_scale():
    c = named_constants(2)
    for name in ("kink_plus", "dot_cancel"):
        rep = rescale_check(corpus.diagram(name), c.i, 2)
        assert rep.ok, rep.failures
    with pytest.raises(ZeroScale):
        rescale_check(corpus.diagram("unknot0"), c.ctx.zero, 2)


@pytest.mark.parametrize("p", [2, 4])
def test_stabilization_identity(p):
    assert stabilization_identity(p) == named_constants(p).ctx.one


def test_valid_labelings_respect_cocycle_conditions():
    # a once-pierced disc forces the piercing label to vanish
    labs = valid_labelings(corpus.diagram("dot_cancel"))
    assert labs == [((0,),)]
    labs = valid_labelings(corpus.diagram("hopf00"))
    assert len(labs) == 4


def test_refined_invariant_matches_engine():
    from qkirby import beads
    from qkirby.sl2 import RESTRICTED, quantum_group

    u = quantum_group(2, RESTRICTED)
    d = corpus.diagram("hopf00", [1, 1])
    assert invariant(d, 2) == beads.evaluate_diagram(d, u)
