# -*- coding: utf-8 -*-
import random
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from checkers.checker_rees import check_rees
from checkers.checker_table import check_table
from checkers.matcher import SearchBudget, match_pattern, match_placements
from checkers.structure_checks import check_no_div_instance, check_star_property, random_no_div_instance
from errors import BadArgumentError, BudgetExceededError, InvalidMatchError
from identities import (
    FAILS,
    HOLDS,
    ZERO_MARK,
    Substitution,
    basis,
    parse_identity,
    random_identity,
    separation_identity,
    witness_is_valid,
)
from monoid import from_presentation, preset
from rees import parse_word_set, rees_quotient
from words import EMPTY_WORD, X, Letter, Word, WordSet, factors, generate_wn, parse_word

Y = Letter("y")
AABB = rees_quotient(parse_word_set("aabb"))


def w(text):
    return parse_word(text)


# ==============================================================================
# KHỚP MẪU
# ==============================================================================

def test_match_xy_into_ab():
    assert len(match_pattern(w("xy"), w("ab"))) == 8


def test_match_squares_non_erasing():
    found = match_pattern(w("xx"), w("aabb"), erasing=False)
    assert found == [Substitution({X: w("a")}), Substitution({X: w("b")})]


def test_match_single_variable_gives_all_factors():
    target = w("abcab")
    found = match_pattern(w("x"), target)
    assert [phi[X] for phi in found] == list(factors(target))


def test_placements_keep_positions():
    places = match_placements(w("x"), w("aba"), erasing=False)
    assert [(str(m.substitution), m.start) for m in places if m.substitution[X] == w("a")] == [
        ("{x->a}", 0),
        ("{x->a}", 2),
    ]


def test_empty_pattern_rejected():
    with pytest.raises(BadArgumentError):
        match_pattern(EMPTY_WORD, w("ab"))


def test_matcher_budget():
    with pytest.raises(BudgetExceededError):
        match_pattern(generate_wn(2), generate_wn(2), budget=10)
    budget = SearchBudget(10_000)
    match_pattern(w("xy"), w("ab"), budget=budget)
    assert 0 < budget.nodes <= 10_000


def _naive_matches(u: Word, target: Word, erasing: bool) -> set[Substitution]:
    fs = set(factors(target))
    values = [f for f in fs if erasing or len(f)]
    variables = sorted(u.alf)
    out = set()
    for combo in product(values, repeat=len(variables)):
        phi = Substitution(dict(zip(variables, combo)))
        if phi.apply(u) in fs:
            out.add(phi)
    return out


patterns = st.lists(st.sampled_from("xyz"), min_size=1, max_size=4).map(lambda cs: Word(Letter(c) for c in cs))
targets = st.lists(st.sampled_from("ab"), min_size=0, max_size=6).map(lambda cs: Word(Letter(c) for c in cs))


@settings(max_examples=60, deadline=None)
@given(patterns, targets, st.booleans())
def test_matcher_agrees_with_naive_enumeration(u, target, erasing):
    found = match_pattern(u, target, erasing=erasing)
    assert set(found) == _naive_matches(u, target, erasing)
    assert found == sorted(found, key=Substitution.sort_key)


# ==============================================================================
# KIỂM TRA BẢNG
# ==============================================================================

def test_table_commutativity_fails_on_aabb():
    out = check_table(AABB, parse_identity("xy = yx"))
    assert out.status == FAILS
    assert out.witness == Substitution({X: w("a"), Y: w("b")})
    assert witness_is_valid(parse_identity("xy = yx"), out, AABB)


def test_table_trivial_identity():
    out = check_table(AABB, parse_identity("xyx = xyx"))
    assert out.status == HOLDS and out.evaluations == 0


def test_table_counts_all_assignments_when_holding():
    out = check_table(AABB, parse_identity("x^3 = x^4"))
    assert out.status == HOLDS
    assert out.evaluations == 10


def test_table_budget():
    with pytest.raises(BudgetExceededError):
        check_table(AABB, parse_identity("x^3 = x^4"), budget=5)


@pytest.mark.parametrize("name", ["M_SCRIPT", "A21", "B21"])
def test_x3_x4_holds_in_presets(name):
    assert check_table(from_presentation(preset(name)), parse_identity("x^3 = x^4")).holds


def test_lee_li_basis_holds_in_m_script_and_aabb():
    M = from_presentation(preset("M_SCRIPT"))
    for identity in basis("LEE_LI"):
        assert check_table(M, identity).holds
        assert check_table(AABB, identity).holds


def test_table_result_does_not_depend_on_threads():
    Q = rees_quotient(WordSet.of_wn([1]))
    for text in ("xyzxty = yxzxty", "xyzt = tzyx"):
        identity = parse_identity(text)
        assert check_table(Q, identity, threads=1) == check_table(Q, identity, threads=4)


# ==============================================================================
# KIỂM TRA TRÊN M(W)
# ==============================================================================

def test_rees_examples():
    assert check_rees(parse_word_set("aabb"), parse_identity("x^3 = x^4")).holds
    for identity in basis("SIGMA"):
        assert check_rees(AABB, identity).holds


def test_rees_separation_witness_is_identity_substitution():
    out = check_rees(WordSet.of_wn([1]), separation_identity(1))
    assert out.status == FAILS
    assert out.witness == Substitution.identity_on(generate_wn(1).alf)


def test_rees_separation_holds_on_other_word():
    assert check_rees(WordSet.of_wn([2]), separation_identity(1)).holds


def test_rees_alphabet_mismatch():
    identity = parse_identity("x = xy")
    out = check_rees(parse_word_set("ab"), identity)
    assert out.status == FAILS
    assert out.witness == Substitution({X: EMPTY_WORD, Y: ZERO_MARK})
    assert witness_is_valid(identity, out, rees_quotient(parse_word_set("ab")))


def test_rees_on_empty_set():
    assert check_rees(WordSet(), parse_identity("xy = yx")).holds


@pytest.mark.parametrize("text", ["xy = yx", "xx = xxx", "xyx = xxy", "x^3y = yx^3", "xyxy = yxyx"])
@pytest.mark.parametrize("words", ["aabb", "abab", "abba", "ab,ba"])
def test_both_checkers_agree_with_same_witness(text, words):
    Q = rees_quotient(parse_word_set(words))
    identity = parse_identity(text)
    by_table = check_table(Q, identity)
    by_rees = check_rees(Q, identity)
    assert by_table.status == by_rees.status
    assert by_table.witness == by_rees.witness


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=0, max_value=100_000))
def test_random_identities_agree(seed):
    identity = random_identity(random.Random(seed))
    Q = rees_quotient(parse_word_set("aabb,abba"))
    by_table = check_table(Q, identity)
    by_rees = check_rees(Q, identity)
    assert by_table.status == by_rees.status
    if by_rees.status == FAILS:
        assert witness_is_valid(identity, by_rees, Q)


# ==============================================================================
# VỊ TỪ CẤU TRÚC
# ==============================================================================

def test_star_property_on_identity_match():
    wn = generate_wn(1)
    assert check_star_property(wn, wn, Substitution.identity_on(wn.alf), start=0)


def test_star_property_on_erasing_match():
    wn, wk = generate_wn(1), generate_wn(2)
    phi = Substitution({a: EMPTY_WORD for a in wn.alf})
    assert check_star_property(wn, wk, phi, start=0)


def test_star_property_for_all_matches_w1_into_w2():
    wn, wk = generate_wn(1), generate_wn(2)
    places = match_placements(wn, wk)
    assert places
    for m in places:
        assert check_star_property(wn, wk, m.substitution, start=m.start)


def test_star_property_rejects_non_match():
    wn, wk = generate_wn(1), generate_wn(2)
    with pytest.raises(InvalidMatchError):
        check_star_property(wn, wk, Substitution.identity_on(wn.alf))
    with pytest.raises(InvalidMatchError):
        check_star_property(wn, wn, Substitution.identity_on(wn.alf), start=1)


def test_no_div_example():
    w_ = w("aba")
    assert check_no_div_instance(w_, Substitution.identity_on(w_.alf), EMPTY_WORD, EMPTY_WORD)


def test_no_div_random_instances():
    rng = random.Random(42)
    for _ in range(300):
        w_, phi, a, b = random_no_div_instance(rng)
        assert check_no_div_instance(w_, phi, a, b)
