"""Diagram parsing, topology bookkeeping and local moves."""

import pytest

from qkirby import corpus
from qkirby import diagrams as dg


def test_parse_render_round_trip_on_corpus():
    for name in corpus.names():
        d = corpus.diagram(name)
        assert dg.parse(dg.render(d)) == d


def test_parse_render_round_trip_with_labels():
    d = corpus.diagram("hopf00", [1, 1])
    again = dg.parse(dg.render(d))
    assert again == d
    assert again.labels == ((1,), (1,))


def test_parse_errors():
    with pytest.raises(dg.ValidationError):
        dg.parse("cup>\ncap> |")  # consumes more strands than available
    with pytest.raises(dg.ValidationError):
        dg.parse("cup>\n| |")  # open strands at the top
    with pytest.raises(dg.ValidationError):
        dg.parse("cup>\ncap<")  # wrong cap orientation
    with pytest.raises(dg.ParseError):
        dg.parse("cup> frob")
    with pytest.raises(dg.ParseError):
        dg.parse("group Z2\ngroup Z2\ncup>\ncap>")


def test_label_line_and_default_group():
    d = dg.parse("label C1 = 1\ncup>\ncap>")
    assert d.group.orders == (2,)
    assert d.labels == ((1,),)
    with pytest.raises(dg.ValidationError):
        dg.parse("label C2 = 1\ncup>\ncap>")


def test_cocycle_validation_at_dots():
    # a disc pierced once cannot carry a nonzero piercing label
    d = corpus.diagram("dot_cancel")
    with pytest.raises(dg.ValidationError):
        d.with_labels(((1,),))
    # pierced twice with opposite directions: any label is fine
    corpus.diagram("dot_double", [1])
    # pierced once by each of two circles: labels must agree
    clasp = corpus.diagram("dot_clasp")
    clasp.with_labels(((1,), (1,)))
    with pytest.raises(dg.ValidationError):
        clasp.with_labels(((1,), (0,)))


def test_certified_linking_data():
    for name in corpus.names():
        entry = corpus.DIAGRAMS[name]
        d = corpus.diagram(name)
        link = dg.linking_matrix(d)
        assert link.lk == entry.lk, name
        assert dg.signature(link) == entry.signature, name
        assert dg.euler_characteristic(d) == entry.chi, name


def test_mod2_rank():
    assert dg.mod2_rank([[0, 1], [1, 0]]) == 2
    assert dg.mod2_rank([[2, 1], [1, 0]]) == 2
    assert dg.mod2_rank([[0, 0], [0, 0]]) == 0
    assert dg.mod2_rank([[1]]) == 1


def test_characteristic_and_even_sublinks():
    assert dg.characteristic_sublinks([[1]]) == [(1,)]
    assert dg.even_sublinks([[1]]) == [(0,)]
    assert dg.characteristic_sublinks([[0, 1], [1, 0]]) == [(0, 0)]
    assert set(dg.even_sublinks([[0, 0], [0, 0]])) == {
        (0, 0), (0, 1), (1, 0), (1, 1)}
    # the (0,1)-framed Hopf link has no characteristic sublink extending 0
    char = dg.characteristic_sublinks([[0, 1], [1, 1]])
    assert char == [(1, 0)]


def test_trade_handles_removes_dots():
    for name in ("dot_cancel", "dot_double", "dot_clasp", "dot_lone",
                 "dot_and_hopf"):
        d = corpus.diagram(name)
        tr = dg.trade_handles(d)
        assert tr.diagram.n_dots == 0
        assert len(tr.circles) == d.n_dots
        assert tr.diagram.n_components == d.n_components + d.n_dots
        # old components keep their labels under the component map
        for old, new in enumerate(tr.old_to_new):
            assert tr.diagram.labels[new] == d.labels[old]


def test_trade_extension_enumeration():
    d = corpus.diagram("dot_double", [1])
    tr = dg.trade_handles(d)
    ext = list(tr.extensions(omega=d.labels))
    assert len(ext) == 2  # the new circle ranges over Z/2
    for labels in ext:
        assert labels[tr.old_to_new[0]] == (1,)
    assert len(list(tr.extensions(None))) == 4


def test_trade_preserves_framings():
    # the traded circle is zero-framed and links each strand it encloses
    d = corpus.diagram("dot_cancel")
    link = dg.linking_matrix(dg.trade_handles(d).diagram)
    n = len(link.lk)
    assert all(link.lk[i][i] == 0 for i in range(n))


def test_stabilize_gk2():
    d = corpus.diagram("kink_plus")
    s = dg.stabilize_gk2(d, 2)
    assert s.n_components == d.n_components + 1
    assert s.n_dots == d.n_dots + 1
    # the new circle is zero-framed and unlinked from the old components
    link = dg.linking_matrix(s)
    assert link.lk[-1] == [0] * s.n_components
    with pytest.raises(dg.InvalidSite):
        dg.stabilize_gk2(d, 99)


def test_reverse_component():
    d = corpus.diagram("hopf00")
    r = dg.reverse_component(d, 1)
    assert r.n_components == 2
    link = dg.linking_matrix(r)
    assert link.lk == [[0, -1], [-1, 0]]
    # reversing twice restores the linking matrix
    rr = dg.reverse_component(r, 1)
    assert dg.linking_matrix(rr).lk == [[0, 1], [1, 0]]


def test_disjoint_union():
    d1 = corpus.diagram("kink_plus")
    d2 = corpus.diagram("dot_cancel")
    u = dg.disjoint_union(d1, d2)
    assert u.n_components == 2
    assert u.n_dots == 1
    assert dg.linking_matrix(u).lk == [[1, 0], [0, 0]]
    assert (dg.euler_characteristic(u)
            == dg.euler_characteristic(d1) + dg.euler_characteristic(d2)
            - 1)


def test_signature_on_matrices():
    assert dg.signature([[1, 0], [0, -1]]) == 0
    assert dg.signature([[2, 1], [1, 2]]) == 2
    assert dg.signature([[0, 1], [1, 0]]) == 0
    assert dg.signature([[0, 3], [3, 1]]) == 0
    assert dg.signature([[5]]) == 1
