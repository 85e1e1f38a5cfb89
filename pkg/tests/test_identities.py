# -*- coding: utf-8 -*-
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from errors import BadArgumentError, MissingVariableError, UnknownBasisError, WordSyntaxError, ZeroWithoutZeroError
from identities import (
    FAILS,
    ZERO_MARK,
    CheckOutcome,
    Identity,
    Substitution,
    basis,
    deletion_invariant,
    evaluate,
    format_identity,
    parse_identity,
    random_identity,
    separation_identity,
    witness_is_valid,
)
from monoid import from_presentation, from_table, preset
from rees import parse_word_set, rees_quotient
from words import EMPTY_WORD, X, Letter, Word, format_word, generate_wn, parse_word

Y, Z = Letter("y"), Letter("z")
AABB = rees_quotient(parse_word_set("aabb"))


def w(text):
    return parse_word(text)


# ---- Cú pháp ----
def test_parse_powers_and_equals_sign():
    i = parse_identity("x^3 = x^4")
    assert i.lhs == w("xxx") and i.rhs == w("xxxx")
    assert parse_identity("x^3≈x^4") == i


def test_parse_empty_side():
    i = parse_identity("1 = x")
    assert i.lhs == EMPTY_WORD and i.rhs == w("x")


@pytest.mark.parametrize("bad", ["xx", "x = y = z", "x = #"])
def test_parse_rejects(bad):
    with pytest.raises(WordSyntaxError):
        parse_identity(bad)


def test_syntax_error_points_into_right_side():
    with pytest.raises(WordSyntaxError) as info:
        parse_identity("xy=x#")
    assert info.value.position == 4


def test_variables_sorted():
    assert parse_identity("zyx = x").variables == [X, Y, Z]


@pytest.mark.parametrize("name, size", [("SIGMA", 5), ("lee_li", 6)])
def test_bases(name, size):
    ids = basis(name)
    assert len(ids) == size
    for i in ids:
        assert parse_identity(format_identity(i)) == i
        assert i.lhs.alf == i.rhs.alf


def test_unknown_basis():
    with pytest.raises(UnknownBasisError):
        basis("nope")


def test_separation_identity_1():
    i = separation_identity(1)
    assert i.lhs == generate_wn(1)
    assert format_word(i.rhs) == "x.x.z_1.t_1.z_1.y_1^1.y_1^0.y_1^1"


@pytest.mark.parametrize("n", [1, 2, 3])
def test_separation_identity_shape(n):
    i = separation_identity(n)
    assert i.lhs.alf == i.rhs.alf
    assert i.rhs[:2] == Word((X, X))
    assert deletion_invariant(i, X)
    assert not deletion_invariant(i, Letter("z", 1))


def test_deletion_invariant_on_basis():
    i = parse_identity("xyzxty = yxzxty")
    assert deletion_invariant(i, X)
    assert deletion_invariant(i, Y)
    assert not deletion_invariant(i, Z)


@given(st.integers(min_value=0, max_value=10_000))
def test_random_identity_is_reproducible(seed):
    a = random_identity(random.Random(seed))
    b = random_identity(random.Random(seed))
    assert a == b
    assert len(a.lhs) >= 1
    assert a.alf <= {X, Y, Z}


# ---- Phép thế ----
def test_substitution_rejects_bad_values():
    with pytest.raises(BadArgumentError):
        Substitution({X: "a"})
    with pytest.raises(BadArgumentError):
        Substitution({"x": w("a")})


def test_substitution_order_and_text():
    phi = Substitution({Y: w("b"), X: w("a")})
    assert list(phi) == [X, Y]
    assert str(phi) == "{x->a, y->b}"
    assert phi.apply(w("xyx")) == w("aba")
    assert Substitution({X: w("a")}).sort_key() < Substitution({X: ZERO_MARK}).sort_key()


def test_identity_substitution():
    phi = Substitution.identity_on(generate_wn(1).alf)
    assert phi.apply(generate_wn(1)) == generate_wn(1)


def test_with_labels():
    phi = Substitution({X: 1, Y: AABB.zero}).with_labels(AABB.monoid)
    assert phi[X] == w("a")
    assert phi[Y] is ZERO_MARK
    assert phi.to_json() == {"x": "a", "y": "0"}


def test_opaque_labels_stay_indices():
    M = from_table(["1", "g"], 0, None, [[0, 1], [1, 0]])
    phi = Substitution({X: 1}).with_labels(M)
    assert phi[X] == 1
    assert phi.to_json(M) == {"x": "g"}
    assert phi.to_json() == {"x": "#1"}


# ---- Tính giá trị ----
def test_evaluate_examples():
    M = AABB.monoid
    assert evaluate(EMPTY_WORD, {}, AABB) == M.one
    assert evaluate(w("xy"), {X: w("a"), Y: w("b")}, AABB) == M.index_of(w("ab"))
    assert evaluate(w("xx"), {X: w("ab")}, AABB) == M.zero
    assert evaluate(w("xy"), {X: w("a"), Y: ZERO_MARK}, AABB) == M.zero
    assert evaluate(w("x"), {X: w("ba")}, AABB) == M.zero


def test_evaluate_with_element_indices():
    M = AABB.monoid
    a, b = M.index_of(w("a")), M.index_of(w("b"))
    assert evaluate(w("xxyy"), {X: a, Y: b}, M) == M.index_of(w("aabb"))


def test_evaluate_missing_variable():
    with pytest.raises(MissingVariableError):
        evaluate(w("xy"), {X: w("a")}, AABB)


def test_zero_mark_without_zero():
    M = from_presentation(preset("TRIVIAL"))
    with pytest.raises(ZeroWithoutZeroError):
        evaluate(w("x"), {X: ZERO_MARK}, M)


def test_witness_is_valid():
    i = parse_identity("xy = yx")
    good = CheckOutcome(FAILS, Substitution({X: w("a"), Y: w("b")}), 1, "table")
    bad = CheckOutcome(FAILS, Substitution({X: w("a"), Y: w("a")}), 1, "table")
    assert witness_is_valid(i, good, AABB)
    assert not witness_is_valid(i, bad, AABB)


values = st.sampled_from(["1", "a", "b", "aa", "ab", "bb", "ba", "abb"]).map(parse_word)


@given(values, values)
def test_evaluate_is_multiplicative(p, q):
    phi = {X: p, Y: q}
    M = AABB.monoid
    assert evaluate(w("xy"), phi, AABB) == M.multiply(evaluate(w("x"), phi, AABB), evaluate(w("y"), phi, AABB))


def test_identity_unpacks():
    lhs, rhs = Identity(w("x"), w("xx"))
    assert (lhs, rhs) == (w("x"), w("xx"))
