# -*- coding: utf-8 -*-
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from errors import BadArgumentError, NotSubsetError
from monoid import element_labels
from rees import element_of, order_formula, parse_word_set, quotient_map, rees_quotient, resolve_monoid_spec
from words import Letter, Word, WordSet, parse_word


@pytest.mark.parametrize("text, order", [("aabb", 10), ("abab", 9), ("abba", 10), ("", 2)])
def test_small_orders(text, order):
    W = parse_word_set(text)
    Q = rees_quotient(W)
    assert Q.order == order
    assert order_formula(W) == order


def test_elements_of_aabb_in_shortlex():
    Q = rees_quotient(parse_word_set("aabb"))
    assert element_labels(Q.monoid) == ["1", "a", "b", "aa", "ab", "bb", "aab", "abb", "aabb", "0"]


def test_products_in_aabb():
    Q = rees_quotient(parse_word_set("aabb"))
    a, b = Q.element_of(parse_word("a")), Q.element_of(parse_word("b"))
    assert Q.monoid.multiply(a, b) == element_of(Q, parse_word("ab"))
    assert Q.monoid.multiply(b, a) == Q.zero
    assert element_of(Q, parse_word("ba")) == Q.zero
    assert element_of(Q, parse_word("1")) == Q.one


def test_empty_set_gives_one_and_zero():
    Q = rees_quotient(WordSet())
    assert Q.order == 2
    assert Q.monoid.multiply(Q.one, Q.zero) == Q.zero


def test_quotient_map_onto_subset():
    Q = rees_quotient(parse_word_set("aabb,abab"))
    Q2 = rees_quotient(parse_word_set("aabb"))
    h = quotient_map(Q, Q2)
    assert h.surjective
    assert h.mapping[Q.element_of(parse_word("ba"))] == Q2.zero
    assert h.mapping[Q.element_of(parse_word("aab"))] == Q2.element_of(parse_word("aab"))


def test_quotient_map_for_wn_chain():
    h = quotient_map(rees_quotient(WordSet.of_wn([1, 2])), rees_quotient(WordSet.of_wn([1])))
    assert h.surjective


def test_quotient_map_needs_subset():
    with pytest.raises(NotSubsetError):
        quotient_map(rees_quotient(parse_word_set("aabb")), rees_quotient(parse_word_set("abab")))


def test_parse_word_set_forms():
    assert parse_word_set("wn:1,2") == WordSet.of_wn([1, 2])
    assert parse_word_set("abab, aabb") == WordSet([parse_word("aabb"), parse_word("abab")])
    assert len(parse_word_set("∅")) == 0
    with pytest.raises(BadArgumentError):
        parse_word_set("wn:x")


def test_resolve_monoid_spec():
    M, Q = resolve_monoid_spec("rees:aabb")
    assert Q is not None and M.order == 10
    M, Q = resolve_monoid_spec("preset:A21")
    assert Q is None and M.order == 6
    with pytest.raises(BadArgumentError):
        resolve_monoid_spec("aabb")


def test_wn_1_order_matches_factor_count():
    W = WordSet.of_wn([1])
    assert rees_quotient(W).order == len(W.factor_set) + 1


words = st.lists(st.sampled_from("ab"), min_size=1, max_size=5).map(lambda cs: Word(Letter(c) for c in cs))


@settings(max_examples=40, deadline=None)
@given(st.lists(words, min_size=1, max_size=3))
def test_order_formula_and_quotient_onto_first_word(ws):
    W = WordSet(ws)
    Q = rees_quotient(W)
    assert Q.order == order_formula(W)
    sub = WordSet(list(W)[:1])
    assert quotient_map(Q, rees_quotient(sub)).surjective
