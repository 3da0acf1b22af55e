from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import S, W
from oracles import brute_pairs
from stringlie.complex import GraphError, parse_graph
from stringlie.graphs import planar, torus
from stringlie.linked import Status, classify_pair, lp1, lp2, pairs_between
from stringlie.words import enumerate_strings, invert, rotate

WEIGHTED_TORUS = "vertex v: a+ b+ a- b-\nedge a: a+ a- length 2\nedge b: b+ b- length 1\n"
WEIGHTED_PLAN = "vertex v: a+ a- b+ b-\nedge a: a+ a- length 3\nedge b: b+ b- length 1\n"


def key(pq):
    return pq.kind, pq.sign, pq.core_length, pq.P.offset, pq.Q.offset, pq.P.power, pq.Q.power


def test_classify_kind1_on_torus(tor):
    a, A, b, B = 0, 1, 2, 3
    cls = classify_pair(tor, (a, (), a), (b, (), b))
    assert cls.status is Status.LINKED and cls.kind == 1 and cls.sign == 1


def test_classify_kind1_on_plan(plan):
    cls = classify_pair(plan, (0, (), 0), (2, (), 2))
    assert cls.status is Status.INTERSECTION and cls.kind == 1


def test_classify_extendable_core_is_not_intersecting(tor):
    a, b = 0, 2
    # cores agree and both continue along b: not a maximal meeting
    assert classify_pair(tor, (b, (a,), b), (a, (a,), b)).status is Status.NOT_INTERSECTING


def test_classify_rejects_unrelated_cores(tor):
    with pytest.raises(GraphError):
        classify_pair(tor, (0, (0,), 0), (2, (2,), 2))


def test_lp1_examples(tor):
    assert lp1(S(tor, "a")) == []
    assert lp1(S(tor, "a b")) == []
    assert lp1(S(tor, "a a b")) == []


def test_lp1_of_non_simple_word(tor):
    pairs = lp1(S(tor, "a a b b"))
    assert len(pairs) == 2
    p, q = pairs
    assert (p.P.offset, p.Q.offset) == (q.Q.offset, q.P.offset)
    assert p.sign == -q.sign


def test_lp2_examples(tor, plan):
    pairs = lp2(S(tor, "a"), S(tor, "b"))
    assert len(pairs) == 1 and pairs[0].kind == 1
    assert lp2(S(plan, "a"), S(plan, "b")) == []


def test_powers_are_necessary(tor):
    pairs = lp2(S(tor, "a"), S(tor, "b a a"))
    assert [(p.kind, p.core_length, p.powers) for p in pairs] == [(2, 2, (3, 1))]
    assert tor.format_word(pairs[0].core) == "a a"


def test_trivial_string_has_no_pairs(tor):
    assert lp1(S(tor, "a A")) == []
    assert lp2(S(tor, "a"), S(tor, "b B")) == []


@pytest.mark.parametrize("text", [WEIGHTED_TORUS, WEIGHTED_PLAN])
def test_matches_oracle_with_weighted_edges(text):
    g = parse_graph(text)
    strings = enumerate_strings(g, 3)
    for X in strings:
        for Y in strings:
            mine = {key(pq) for pq in pairs_between(g, X.canon, Y.canon)}
            assert mine == brute_pairs(g, X.canon, Y.canon), (X, Y)


@pytest.mark.parametrize("graph", [torus, planar])
def test_intersection_pairs_match_oracle(graph):
    g = graph()
    strings = enumerate_strings(g, 3)
    for X in strings:
        for Y in strings:
            mine = {key(pq) for pq in pairs_between(g, X.canon, Y.canon, linked_only=False)}
            assert mine == brute_pairs(g, X.canon, Y.canon, linked_only=False), (X, Y)


def test_full_offsets_repeat_each_pair_n_m_times(tor):
    strings = enumerate_strings(tor, 2)
    for X in strings:
        for Y in strings:
            full = brute_pairs(tor, X.canon, Y.canon, full_offsets=True)
            p, q = len(X), len(Y)
            folded = Counter((k, s, L, i % p, j % q, n, m) for k, s, L, i, j, n, m in full)
            assert set(folded) == brute_pairs(tor, X.canon, Y.canon)
            assert all(c == n * m for (_, _, _, _, _, n, m), c in folded.items())


strings_tor = st.sampled_from(enumerate_strings(torus(), 5))
strings_plan = st.sampled_from(enumerate_strings(planar(), 5))


@settings(max_examples=150)
@given(st.one_of(st.tuples(strings_tor, strings_tor), st.tuples(strings_plan, strings_plan)))
def test_swap_bijection(XY):
    X, Y = XY
    fwd = Counter((p.kind, p.sign) for p in lp2(X, Y))
    bwd = Counter((p.kind, -p.sign) for p in lp2(Y, X))
    assert fwd == bwd


@settings(max_examples=100)
@given(strings_tor)
def test_self_pairs_match_inverse_pairs(X):
    assert len(lp2(X, X)) == len(lp2(X, X.inverse()))


@settings(max_examples=100)
@given(strings_tor, strings_tor, st.integers(0, 9), st.integers(0, 9))
def test_rotation_relabels_pairs(X, Y, r, s):
    g = X.graph
    x, y = X.canon, Y.canon
    base = Counter((p.kind, p.sign, p.core_length) for p in pairs_between(g, x, y))
    moved = pairs_between(g, rotate(x, r), rotate(y, s))
    assert Counter((p.kind, p.sign, p.core_length) for p in moved) == base
    shifted = {((p.P.offset + r) % len(x), (p.Q.offset + s) % len(y), p.kind) for p in moved}
    assert shifted == {(p.P.offset, p.Q.offset, p.kind) for p in pairs_between(g, x, y)}


@settings(max_examples=100)
@given(strings_tor, strings_tor)
def test_window_and_core_invariants(X, Y):
    lx, ly = X.length, Y.length
    for p in lp2(X, Y):
        n, m = p.powers
        assert (n - 1) * lx <= p.core_length < n * lx
        assert (m - 1) * ly <= p.core_length < m * ly
        assert p.core_length < lx + ly
        assert p.P.core() == p.core
        assert p.Q.core() == {1: (), 2: p.core, 3: invert(p.core)}[p.kind]
        assert (p.kind == 1) == (p.core == ())


def test_sorted_output(tor):
    pairs = lp2(S(tor, "a a a b b"), S(tor, "a b b"))
    assert pairs == sorted(pairs, key=lambda p: p.sort_key())
