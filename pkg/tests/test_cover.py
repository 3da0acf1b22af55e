import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import S, W
from stringlie.algebra import bracket
from stringlie.complex import GraphError
from stringlie.cover import (
    BOTH,
    PRESERVING,
    REVERSING,
    CrossingElement,
    axis_of,
    bracket_self_inverse_via_cover,
    c_curves,
    check_formula2,
    orientation_class,
    t0_elements,
    t1_elements,
)
from stringlie.graphs import planar, theta, torus
from stringlie.linked import pairs_between
from stringlie.words import canonical_string, enumerate_strings, invert, is_cyclically_reduced, rotate

tor_words = enumerate_strings(torus(), 5)


def test_axis(tor):
    ax = axis_of(W(tor, "a b"), tor)
    assert ax.vertex(3) == W(tor, "a b a") and ax.vertex(-1) == W(tor, "B")
    assert ax.locate(W(tor, "B A B")) == -3 and ax.locate(W(tor, "a a")) is None
    assert ax.side(W(tor, "a a")) in (1, -1)
    with pytest.raises(GraphError):
        axis_of(W(tor, "a b A"), tor)
    with pytest.raises(ValueError):
        axis_of((), tor)


def test_axis_side_of_branches(tor):
    ax = axis_of(W(tor, "a"), tor)
    # at the base, the axis arrives along a (reversal a-) and leaves along a+;
    # the order a+ b+ a- b- puts b+ on the left and b- on the right
    assert ax.side(W(tor, "b")) == 1
    assert ax.side(W(tor, "B")) == -1


def test_t1_examples(tor, plan):
    assert t1_elements(W(tor, "a"), tor) == []
    # a b bounds a pants leg: its translates only touch the axis at a vertex
    touching = t1_elements(W(plan, "a b"), plan)
    assert [e.orientation for e in touching] == [BOTH, BOTH]
    assert t0_elements(W(plan, "a b"), plan) == []
    es = t1_elements(W(tor, "a a b"), tor)
    x = W(tor, "a a b")
    assert len(es) == len(pairs_between(tor, x, invert(x), linked_only=False)) > 0
    assert len(es) % 2 == 0


def test_t0_examples(tor):
    assert t0_elements(W(tor, "a b"), tor) == []
    assert t0_elements(W(tor, "a"), tor) == []
    assert t0_elements(W(tor, "a a b"), tor) == []
    assert len(t0_elements(W(tor, "a a b b"), tor)) == 2


def test_cover_bracket_examples(tor):
    assert bracket_self_inverse_via_cover(S(tor, "a b")) == 0
    assert bracket_self_inverse_via_cover(S(tor, "a")) == 0
    X = S(tor, "a a b b")
    result = bracket_self_inverse_via_cover(X)
    assert len(result) == 2 and result == bracket(X, X.inverse())


def test_orientation_classes_cover_all_kinds(tor):
    seen = set()
    for X in tor_words:
        for e in t1_elements(X.canon, tor):
            seen.add(orientation_class(e, X.canon, tor))
    assert seen == {BOTH, PRESERVING, REVERSING}


@pytest.mark.parametrize("graph", [torus, planar, theta])
def test_elements_satisfy_their_contract(graph):
    g = graph()
    for X in enumerate_strings(g, 5):
        a = X.canon
        p, la = len(a), g.word_length(a)
        ax = axis_of(a, g)
        es = t1_elements(a, g)
        assert {e.g for e in es} == {invert(e.g) for e in es}
        for e in es:
            kind = e.pair.kind
            assert e.orientation == {1: BOTH, 2: REVERSING, 3: PRESERVING}[kind]
            assert orientation_class(e, a, g) == e.orientation
            # g carries a_seg onto b_seg
            assert ax.locate(canonical_reduce(e.g + ax.vertex(e.a_seg[0]))) == e.b_seg[0]
            assert ax.locate(canonical_reduce(e.g + ax.vertex(e.a_seg[1]))) == e.b_seg[1]
            # segments touch alpha(0) at most and never alpha(1)
            for lo, hi in (sorted(e.a_seg), e.b_seg):
                assert 0 <= hi < p
            assert g.word_length(e.t) < la
            if e.orientation == REVERSING:
                assert 2 * g.word_length(e.t) < la


def canonical_reduce(w):
    from stringlie.words import reduce

    return reduce(w)


@pytest.mark.parametrize("graph", [torus, planar])
def test_inverse_swaps_segments(graph):
    g = graph()
    for X in enumerate_strings(g, 5):
        es = {e.g: e for e in t1_elements(X.canon, g)}
        for e in es.values():
            inv = es[invert(e.g)]
            assert sorted(inv.b_seg) == sorted(e.a_seg)
            assert sorted(inv.a_seg) == sorted(e.b_seg)


def test_reversing_translates_are_disjoint(tor):
    for X in enumerate_strings(tor, 6):
        p = len(X)
        for e in t1_elements(X.canon, tor):
            if e.orientation != REVERSING:
                continue
            a_lo, a_hi = sorted(e.a_seg)
            for n in (-1, 0, 1):
                for m in (-1, 0, 1):
                    lo = max(a_lo + n * p, e.b_seg[0] + m * p)
                    hi = min(a_hi + n * p, e.b_seg[1] + m * p)
                    assert lo > hi


def test_c_curve_shapes(tor):
    for X in tor_words:
        a = X.canon
        for e in t1_elements(a, tor):
            c1, c2, gamma, t = c_curves(e, a, tor)
            assert is_cyclically_reduced(c1 + c2)
            assert len(c1) == len(c2)
            if e.orientation == REVERSING:
                assert canonical_string(c1) == canonical_string(a)
                assert canonical_string(c2) == canonical_string(invert(a))
                assert len(c1) == len(a)
            else:
                assert len(c1) == len(a) - len(t)
            if e.orientation == BOTH:
                assert t == ()
                assert canonical_string(c1) == canonical_string(a)


def test_c_curves_of_inverse_element(tor):
    for X in tor_words:
        a = X.canon
        es = {e.g: e for e in t1_elements(a, tor)}
        for e in es.values():
            if e.orientation == PRESERVING:
                c1_inv = c_curves(es[invert(e.g)], a, tor)[0]
                assert c1_inv == invert(c_curves(e, a, tor)[1])


def test_formula2_and_negative_control(tor):
    a = W(tor, "a b a B")
    es = t1_elements(a, tor)
    assert es and all(check_formula2(e, a, tor) for e in es)
    e = es[0]
    lo, hi = e.b_seg
    shifted = CrossingElement(e.g, e.a_seg, (lo + 1, hi + 1), e.t, e.gamma + (a[hi % len(a)],),
                              e.orientation, e.pair)
    assert not check_formula2(shifted, a, tor)


@settings(max_examples=60)
@given(st.sampled_from(tor_words), st.integers(0, 6))
def test_eps_matches_linked_pair_sign(X, r):
    a = rotate(X.canon, r)
    t0 = t0_elements(a, torus())
    assert all(e.sign == e.pair.sign and e.pair.linked for e in t0)
    assert len(t0) == sum(e.pair.linked for e in t1_elements(a, torus()))


@settings(max_examples=60)
@given(st.sampled_from(enumerate_strings(planar(), 5) + enumerate_strings(theta(), 6)))
def test_cover_bracket_matches_on_other_graphs(X):
    assert bracket_self_inverse_via_cover(X) == bracket(X, X.inverse())
