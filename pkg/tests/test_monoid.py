# -*- coding: utf-8 -*-
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from errors import (
    BadIdentityError,
    BadZeroError,
    DuplicateLabelsError,
    MonoidError,
    NonAssociativeError,
    NotStabilizedError,
    UnknownPresetError,
)
from monoid import PRESETS, ZERO, FiniteMonoid, element_labels, from_presentation, from_table, preset
from words import parse_word

Z2 = (["1", "g"], 0, None, [[0, 1], [1, 0]])


# ---- from_table ----
def test_cyclic_group_of_order_two():
    M = from_table(*Z2)
    assert M.order == 2
    assert M.multiply(1, 1) == 0
    assert M.product([1, 1, 1]) == 1


def test_non_associative_table_is_rejected():
    # a·a=b, a·b=a, b·a=b, b·b=a: (a·a)·b = b·b = a, a·(a·b) = a·a = b
    table = [[0, 1, 2], [1, 2, 1], [2, 2, 1]]
    with pytest.raises(NonAssociativeError) as info:
        from_table(["1", "a", "b"], 0, None, table)
    s, t, u = info.value.triple
    arr = np.array(table)
    assert arr[arr[s, t], u] != arr[s, arr[t, u]]


def test_bad_identity():
    with pytest.raises(BadIdentityError):
        from_table(["1", "g"], 0, None, [[1, 1], [1, 1]])


def test_bad_zero():
    with pytest.raises(BadZeroError):
        from_table(*Z2[:2], 1, Z2[3])


def test_duplicate_labels():
    with pytest.raises(DuplicateLabelsError):
        from_table(["a", "a"], 0, None, Z2[3])


@pytest.mark.parametrize("table", [[[0, 1]], [[0, 2], [2, 0]], [[0.0, 1.0], [1.0, 0.0]]])
def test_malformed_tables(table):
    with pytest.raises(MonoidError):
        from_table(["1", "g"], 0, None, table)


def test_multiply_out_of_range():
    M = from_table(*Z2)
    with pytest.raises(IndexError):
        M.multiply(0, 2)


def test_table_is_read_only():
    M = from_table(*Z2)
    with pytest.raises(ValueError):
        M.table[0, 0] = 1


# ---- Biểu diễn ----
@pytest.mark.parametrize("name", ["M_SCRIPT", "A21", "B21"])
def test_presets_have_order_six_and_satisfy_relations(name):
    M = from_presentation(preset(name))
    assert M.order == 6
    assert M.zero is not None
    assert M.satisfies_relations(preset(name))


def test_m_script_elements():
    M = from_presentation(preset("m_script"))
    assert element_labels(M) == ["1", "a", "e", "aa", "ea", "0"]
    a, e = M.index_of(parse_word("a")), M.index_of(parse_word("e"))
    assert M.multiply(e, e) == e
    assert M.multiply(a, e) == M.zero


def test_trivial_preset():
    M = from_presentation(preset("TRIVIAL"))
    assert M.order == 1
    assert M.zero is None


def test_unknown_preset():
    with pytest.raises(UnknownPresetError):
        preset("Z3")


def test_not_stabilized_with_tiny_bound():
    with pytest.raises(NotStabilizedError) as info:
        from_presentation(PRESETS["M_SCRIPT"], max_len=1)
    assert info.value.max_len == 1
    assert info.value.orders == (4, 6)
    assert "-1" not in str(info.value)


def test_presets_relations_use_zero_marker():
    assert any(rhs is ZERO for _, rhs in PRESETS["B21"].relations)


# ---- Xuất / nhập ----
@pytest.mark.parametrize("name", ["M_SCRIPT", "A21", "B21", "TRIVIAL"])
def test_json_round_trip(name):
    M = from_presentation(preset(name))
    again = FiniteMonoid.from_json(M.dumps())
    assert again.same_as(M)


def test_opaque_labels_stay_opaque():
    M = from_table(*Z2)
    again = FiniteMonoid.from_json(M.to_json())
    assert again.elements == ("1", "g")


def test_dataframe_view():
    M = from_presentation(preset("A21"))
    df = M.to_dataframe()
    assert df.shape == (6, 6)
    assert list(df.index) == element_labels(M)


B21 = from_presentation(preset("B21"))


@given(st.lists(st.integers(min_value=0, max_value=5), max_size=8))
def test_product_agrees_with_pairwise_fold(items):
    M = B21
    acc = M.one
    for s in items:
        acc = M.multiply(acc, s)
    assert M.product(items) == acc
