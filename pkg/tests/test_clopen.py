"""Clopen-set algebra: constructors, Boolean laws, relative ranges, cycles."""

import pytest
from hypothesis import given, settings, strategies as st

from subshift_algebra.clopen import (ClopenSet, CycleKind, as_singleton,
                                     c_set, classify_cycle, cylinder,
                                     empty_set, follower, full_set, refine,
                                     relative_range)
from subshift_algebra.shift import SftSpec, build_follower_graph
from subshift_algebra.words import OMEGA, EpPoint, ep_normalize

from conftest import W, words_up_to


def member(point: EpPoint, a: ClopenSet) -> bool:
    """Membership oracle: compare the point's prefix at resolution length."""
    return point.prefix(a.resolution) in a.words


# -- constructors ---------------------------------------------------------------


def test_cylinder_examples(g_gold):
    assert cylinder(g_gold, W("b")).words == {W("ba")}
    assert cylinder(g_gold, W("b")).resolution == 2
    assert cylinder(g_gold, OMEGA) == full_set(g_gold)
    assert cylinder(g_gold, W("bb")).is_empty()


def test_follower_examples(g_gold, g_y):
    assert follower(g_gold, W("b")) == cylinder(g_gold, W("a"))
    assert follower(g_gold, OMEGA) == full_set(g_gold)
    assert follower(g_y, W("b")).words == {W("b")}
    assert follower(g_gold, W("bb")).is_empty()


def test_c_set_examples(g_gold, g_full):
    assert c_set(g_gold, W("b"), W("a")) == cylinder(g_gold, W("aa"))
    assert c_set(g_full, OMEGA, OMEGA) == full_set(g_full)
    assert c_set(g_gold, W("bb"), OMEGA).is_empty()


def test_refine_examples(g_gold, g_full):
    z = cylinder(g_gold, W("b"))
    assert refine(z, 3).words == {W("baa"), W("bab")}
    assert refine(empty_set(g_gold), 4).is_empty()
    assert refine(cylinder(g_full, W("a")).compact(), 2).words == {W("aa"), W("ab")}


def test_equality_is_canonical(g_gold):
    a = cylinder(g_gold, W("b"))
    assert a == refine(a, 5)
    assert a.compact() == a
    assert not a == full_set(g_gold)


# -- Boolean structure -------------------------------------------------------------


def test_boolean_examples(g_full, g_gold):
    assert cylinder(g_full, W("a")).complement() == cylinder(g_full, W("b"))
    assert cylinder(g_gold, W("ab")).intersect(cylinder(g_gold, W("aa"))).is_empty()
    u = cylinder(g_gold, W("aa")) | cylinder(g_gold, W("ab")) | cylinder(g_gold, W("ba"))
    assert u == full_set(g_gold)


@st.composite
def clopen_sets(draw, graph):
    n = draw(st.integers(graph.m, 5))
    pool = graph.legal_words(n)
    words = draw(st.sets(st.sampled_from(pool), max_size=len(pool)))
    return ClopenSet(graph, n, frozenset(words))


@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_boolean_laws(g_gold, data):
    a = data.draw(clopen_sets(g_gold))
    b = data.draw(clopen_sets(g_gold))
    c = data.draw(clopen_sets(g_gold))
    assert (a | b) | c == a | (b | c)
    assert (a & b) & c == a & (b & c)
    assert a & (b | c) == (a & b) | (a & c)
    assert a | (b & c) == (a | b) & (a | c)
    assert (a | b).complement() == a.complement() & b.complement()
    assert (a & b).complement() == a.complement() | b.complement()
    assert a.complement().complement() == a
    assert a - b == a & b.complement()
    assert a.is_subset(a | b) and (a & b).is_subset(a)


def test_cross_graph_operands_rejected(g_gold, g_y):
    with pytest.raises(ValueError):
        full_set(g_gold).union(full_set(g_y))


# -- relative range -------------------------------------------------------------------


def test_relative_range_examples(g_gold):
    assert relative_range(full_set(g_gold), W("a")) == follower(g_gold, W("a"))
    assert relative_range(cylinder(g_gold, W("a")), W("b")).is_empty()


def test_follower_composition(all_graphs):
    """r(F_alpha, beta) = F_{alpha.beta} for all short legal compositions."""
    for g in all_graphs.values():
        for alpha in words_up_to(g, 3):
            for beta in words_up_to(g, 3):
                lhs = relative_range(follower(g, alpha), beta)
                assert lhs == follower(g, alpha + beta)


def test_single_letter_composition(all_graphs):
    """r(r(A, beta), a) = r(A, beta.a) on cylinders, one letter at a time."""
    for g in all_graphs.values():
        for w in words_up_to(g, 2, include_empty=False):
            a_set = cylinder(g, w)
            for beta in words_up_to(g, 2):
                for a in range(g.n_letters):
                    lhs = relative_range(relative_range(a_set, beta), (a,))
                    assert lhs == relative_range(a_set, beta + (a,))


def test_cycle_condition_iterates(all_graphs):
    """A inside r(A, alpha) propagates to every power alpha^n, n <= 5."""
    found = 0
    for g in all_graphs.values():
        for w in words_up_to(g, 2, include_empty=False):
            a_set = cylinder(g, w)
            for alpha in words_up_to(g, 2, include_empty=False):
                if a_set.is_empty() or not a_set.is_subset(relative_range(a_set, alpha)):
                    continue
                found += 1
                for n in range(1, 6):
                    assert g.is_prefix_legal(alpha * n)
                    assert a_set.is_subset(relative_range(a_set, alpha * n))
    assert found > 0


def test_membership_oracle(g_gold, g_y):
    a_inf = ep_normalize(OMEGA, W("a"))
    abab = ep_normalize(OMEGA, W("ab"))
    assert member(a_inf, full_set(g_gold))
    assert member(a_inf, cylinder(g_gold, W("aa")))
    assert not member(abab, cylinder(g_gold, W("aa")))
    assert member(abab, cylinder(g_gold, W("ab")))
    b_inf = ep_normalize(OMEGA, W("b"))
    assert member(b_inf, cylinder(g_y, W("bb")))
    assert not member(b_inf, cylinder(g_y, W("ab")))


# -- singletons and cycles ---------------------------------------------------------------


def test_as_singleton(g_y, g_gold):
    assert as_singleton(cylinder(g_y, W("b"))) == EpPoint(OMEGA, W("b"))
    assert as_singleton(cylinder(g_gold, W("b"))) is None
    assert as_singleton(empty_set(g_y)) is None


def test_classify_examples(g_y, g_gold, g_full):
    got = classify_cycle(cylinder(g_y, W("b")), W("b"))
    assert got.kind is CycleKind.CYCLE_WITHOUT_EXIT and got.minimal is True
    got = classify_cycle(cylinder(g_gold, W("a")), W("a"))
    assert got.kind is CycleKind.CYCLE_WITH_EXIT
    got = classify_cycle(cylinder(g_gold, W("b")), W("a"))
    assert got.kind is CycleKind.NOT_A_CYCLE
    got = classify_cycle(cylinder(g_full, W("a")), W("aa"))
    assert got.kind is CycleKind.CYCLE_WITH_EXIT


def test_classify_nonminimal_cycle():
    g = build_follower_graph(SftSpec.make("ab", ["ba"]))
    got = classify_cycle(cylinder(g, W("bb")), W("bb"))
    assert got.kind is CycleKind.CYCLE_WITHOUT_EXIT and got.minimal is False
