# -*- coding: utf-8 -*-
"""
rees.py
Dựng M(W) cho một tập từ hữu hạn W và đồng cấu thương M(W) -> M(W') khi W' ⊆ W.
"""
from __future__ import annotations

import logging
import re
from dataclasses import dataclass

import numpy as np

from errors import BadArgumentError, HomomorphismViolationError, NotSubsetError
from monoid import ZERO_LABEL, FiniteMonoid, Label, from_presentation, from_table, preset
from words import EMPTY_WORD, Word, WordSet, generate_wn, parse_word, shortlex_key

logger = logging.getLogger(__name__)

_WN_MACRO = re.compile(r"\s*wn\s*:\s*(.*)$")


@dataclass(frozen=True)
class ReesQuotient:
    source: WordSet
    monoid: FiniteMonoid

    @property
    def order(self) -> int:
        return self.monoid.order

    @property
    def zero(self) -> int:
        return self.monoid.zero

    @property
    def one(self) -> int:
        return self.monoid.one

    def element_of(self, w: Word) -> int:
        return element_of(self, w)


def rees_quotient(W: WordSet) -> ReesQuotient:
    """Phần tử: ε, các thừa số khác rỗng của W theo shortlex, rồi 0."""
    if not isinstance(W, WordSet):
        W = WordSet(W)
    factor_words = sorted((f for f in W.factor_set if len(f) > 0), key=shortlex_key)
    labels: list[Label] = [EMPTY_WORD, *factor_words, ZERO_LABEL]
    n = len(labels)
    zero = n - 1
    index = {w: i for i, w in enumerate(labels[:-1])}

    table = np.full((n, n), zero, dtype=np.int64)
    for i, f in enumerate(labels[:-1]):
        for j, g in enumerate(labels[:-1]):
            table[i, j] = index.get(f + g, zero)
    monoid = from_table(labels, 0, zero, table)
    logger.debug("M(%s) có cấp %d", W, monoid.order)
    return ReesQuotient(source=W, monoid=monoid)


def element_of(Q: ReesQuotient, w: Word) -> int:
    """Phần tử mang nhãn w nếu w là thừa số của W, ngược lại là 0."""
    if len(w) == 0:
        return Q.monoid.one
    try:
        return Q.monoid.index_of(w)
    except KeyError:
        return Q.monoid.zero


def order_formula(W: WordSet) -> int:
    """|M(W)| = số thừa số khác rỗng phân biệt + 2 (kể cả khi W rỗng)."""
    return len(W.factor_set) - 1 + 2


# ==============================================================================
# ĐỒNG CẤU THƯƠNG
# ==============================================================================

@dataclass(frozen=True)
class Homomorphism:
    source: ReesQuotient
    target: ReesQuotient
    mapping: tuple[int, ...]

    @property
    def surjective(self) -> bool:
        return set(self.mapping) == set(range(self.target.order))


def quotient_map(Q: ReesQuotient, Q2: ReesQuotient) -> Homomorphism:
    """
    Ánh xạ f -> f nếu f là thừa số của W', ngược lại f -> 0. Kiểm tra đầy đủ trên bảng
    rằng đây là đồng cấu toàn ánh.
    """
    if not Q2.source.issubset(Q.source):
        raise NotSubsetError(f"{Q2.source} không phải tập con của {Q.source}")
    src, dst = Q.monoid, Q2.monoid
    mapping = np.empty(src.order, dtype=np.int64)
    for i, label in enumerate(src.elements):
        if i == src.zero:
            mapping[i] = dst.zero
        else:
            mapping[i] = element_of(Q2, label)

    # f(s·t) == f(s)·f(t) với mọi cặp
    lhs = mapping[src.table]
    rhs = dst.table[mapping[:, None], mapping[None, :]]
    bad = np.argwhere(lhs != rhs)
    if bad.size:
        raise HomomorphismViolationError(tuple(bad[0]))
    if mapping[src.one] != dst.one:
        raise HomomorphismViolationError((src.one, src.one))
    hom = Homomorphism(source=Q, target=Q2, mapping=tuple(int(v) for v in mapping))
    if not hom.surjective:
        missing = sorted(set(range(dst.order)) - set(hom.mapping))
        raise HomomorphismViolationError((missing[0], missing[0]))
    return hom


# ==============================================================================
# CÚ PHÁP TẬP TỪ
# ==============================================================================

def parse_word_set(text: str) -> WordSet:
    """`aabb,abab` hoặc macro `wn:1,2`. Chuỗi rỗng hoặc `∅` cho tập rỗng."""
    stripped = (text or "").strip()
    if stripped in ("", "∅", "{}", "empty"):
        return WordSet()
    m = _WN_MACRO.match(stripped)
    if m:
        try:
            ns = [int(part) for part in m.group(1).split(",") if part.strip()]
        except ValueError:
            raise BadArgumentError(f"Macro wn không hợp lệ: {text!r}")
        return WordSet(generate_wn(n) for n in ns)
    return WordSet(parse_word(part) for part in stripped.split(",") if part.strip())


def resolve_monoid_spec(spec: str) -> tuple[FiniteMonoid, ReesQuotient | None]:
    """`rees:<tập từ>` hoặc `preset:<tên>`; trả về monoid và (nếu có) thương Rees."""
    kind, sep, body = (spec or "").partition(":")
    kind = kind.strip().lower()
    if not sep or kind not in ("rees", "preset"):
        raise BadArgumentError(f"Monoid phải có dạng rees:<tập từ> hoặc preset:<tên>, nhận được {spec!r}")
    if kind == "preset":
        return from_presentation(preset(body)), None
    Q = rees_quotient(parse_word_set(body))
    return Q.monoid, Q
