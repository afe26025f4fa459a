"""Bead evaluation engine: frozen values, mode agreement, conventions."""

import itertools

import pytest

from qkirby import beads, corpus
from qkirby import diagrams as dg
from qkirby.cyclotomic import parse
from qkirby.sl2 import RESTRICTED, quantum_group

U2 = quantum_group(2, RESTRICTED)
U4 = quantum_group(4, RESTRICTED)

# Values frozen from an independent hand-run of the algorithm at p = 2
# (zero labels throughout); any change in engine behaviour must show up here.
FROZEN_P2 = {
    "dot_and_hopf": "1 [N=16]",
    "dot_cancel": "1 [N=16]",
    "dot_clasp": "0 [N=16]",
    "dot_double": "0 [N=16]",
    "dot_lone": "0 [N=16]",
    "dots_two": "1 [N=16]",
    "hopf00": "1 [N=16]",
    "hopf01": "1 [N=16]",
    "hopf11": "0 [N=16]",
    "hopf20": "1 [N=16]",
    "kink_minus": "-z^4 [N=16]",
    "kink_plus": "z^4 [N=16]",
    "kink_unknot": "0 [N=16]",
    "kinks_pm": "1 [N=16]",
    "unknot0": "0 [N=16]",
    "unlink00": "0 [N=16]",
}


def test_frozen_corpus_values_p2():
    for name in corpus.names():
        d = corpus.diagram(name)
        got = beads.evaluate_diagram(d, U2)
        assert got == parse(FROZEN_P2[name]), name


def test_framed_unknots_give_graded_ribbon_integrals():
    # a +/-1-framed unknot labeled alpha evaluates to lambda(v_-+ 1_alpha)
    for p, u in ((2, U2), (4, U4)):
        lv = u.lambda_v_values()
        for alpha in (0, 1):
            kp = corpus.diagram("kink_plus", [alpha])
            km = corpus.diagram("kink_minus", [alpha])
            assert beads.evaluate_diagram(kp, u) == lv[(-1, alpha)], (p, alpha)
            assert beads.evaluate_diagram(km, u) == lv[(1, alpha)], (p, alpha)


def test_lambda_v_closed_values_p4():
    lv = U4.lambda_v_values()
    assert lv[(-1, 1)] == parse("-z^14 [N=32]")
    assert lv[(1, 1)] == parse("z^2 [N=32]")
    assert lv[(1, 0)].is_zero() and lv[(-1, 0)].is_zero()


def test_batch_matches_single_evaluations():
    d = corpus.diagram("hopf00")
    labelings = [((a,), (b,)) for a in (0, 1) for b in (0, 1)]
    batch = beads.evaluate_diagram_batch(d, U2, labelings)
    for labels, val in zip(labelings, batch):
        single = beads.evaluate_diagram(d.with_labels(labels), U2)
        assert val == single, labels


def test_graded_in_u_matches_full_tilde():
    for name in ("kink_plus", "hopf00", "dot_cancel", "dot_double"):
        d = corpus.diagram(name)
        full = beads.evaluate_diagram(d, U2, mode="full-tilde")
        graded = beads.evaluate_diagram(d, U2, mode="graded-in-U")
        assert full == graded, name


def test_tilde_sum_is_sum_of_refined_values():
    from qkirby.invariants import valid_labelings

    for name in ("hopf00", "kink_plus", "dot_double", "kinks_pm"):
        d = corpus.diagram(name)
        direct = beads.evaluate_diagram(d, U2, mode="tilde-sum")
        labelings = valid_labelings(d)
        parts = beads.evaluate_diagram_batch(d, U2, labelings)
        total = U2.ctx.zero
        for v in parts:
            total = total + v
        assert direct == total, name


def test_integral_scale_is_linear_per_component():
    xi = U2.ctx.zeta_power(4)  # i
    for name in ("hopf00", "kinks_pm", "dot_cancel"):
        d = corpus.diagram(name)
        base = beads.evaluate_diagram(d, U2)
        scaled = beads.evaluate_diagram(d, U2, integral_scale=xi)
        assert scaled == base * xi ** d.n_components, name
        if d.n_dots:
            dotted = beads.evaluate_diagram(d, U2, cointegral_scale=xi)
            assert dotted == base * xi ** d.n_dots, name


def test_equivalent_convention_gauges():
    # four sign/side gauges produce the same invariant; calibrated once
    # against the move corpus and frozen here
    gauges = [
        (True, False, 1, True, True, False),
        (True, False, 1, False, False, True),
        (False, True, -1, True, True, True),
        (False, True, -1, False, False, False),
    ]
    for name in ("hopf01", "dot_cancel", "kink_plus"):
        d = corpus.diagram(name)
        vals = [
            beads.evaluate_diagram(d, U2, conventions=beads.Conventions(*g))
            for g in gauges
        ]
        assert all(v == vals[0] for v in vals), name


def test_refined_hopf00_per_labeling():
    # the refined values behind the published unrefined value 1
    vals = {}
    for a, b in itertools.product((0, 1), repeat=2):
        d = corpus.diagram("hopf00", [a, b])
        vals[(a, b)] = beads.evaluate_diagram(d, U2)
    total = U2.ctx.zero
    for v in vals.values():
        total = total + v
    assert total == beads.evaluate_diagram(corpus.diagram("hopf00"), U2,
                                           mode="tilde-sum")


def test_non_z2_group_is_rejected():
    d = corpus.diagram("hopf00", group=dg.FiniteAbelianGroup((3,)))
    with pytest.raises(beads.UnsupportedGroup):
        beads.evaluate_diagram(d, quantum_group(3, RESTRICTED))


def test_small_mode_requires_zero_labels():
    d = corpus.diagram("hopf00", [1, 0])
    with pytest.raises(beads.UnsupportedGroup):
        beads.evaluate_diagram(d, U2, mode="small")


def test_unknown_mode_is_rejected():
    with pytest.raises(ValueError):
        beads.evaluate_diagram(corpus.diagram("unknot0"), U2, mode="spam")
