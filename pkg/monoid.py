# -*- coding: utf-8 -*-
"""
monoid.py
- FiniteMonoid: bảng nhân đã kiểm tra (kết hợp, đơn vị, phần tử không).
- Dựng monoid từ biểu diễn hữu hạn bằng bao đóng tương đẳng có chặn độ dài.
"""
from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Sequence, Union

import numpy as np
import pandas as pd

import config
from errors import (
    BadIdentityError,
    BadZeroError,
    DuplicateLabelsError,
    EmptyGeneratorsError,
    MonoidError,
    NonAssociativeError,
    NotStabilizedError,
    PresentationError,
    UnknownPresetError,
    WordSyntaxError,
)
from words import EMPTY_WORD, Letter, Word, format_word, parse_word

logger = logging.getLogger(__name__)


class ZeroMark:
    """Dấu 'bằng 0' dùng trong quan hệ và phép thế."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "ZERO"

    def __str__(self) -> str:
        return "0"

    def __reduce__(self):
        return (ZeroMark, ())


ZERO = ZeroMark()
ZERO_LABEL = "0"

Label = Union[Word, str]


def label_text(label: Label) -> str:
    return format_word(label) if isinstance(label, Word) else str(label)


def _label_to_json(label: Label) -> str:
    # ký hiệu mờ được đặt trong dấu nháy kép để không lẫn với cú pháp từ
    return format_word(label) if isinstance(label, Word) else f'"{label}"'


def _label_from_json(text: str) -> Label:
    if len(text) >= 2 and text.startswith('"') and text.endswith('"'):
        return text[1:-1]
    try:
        return parse_word(text)
    except WordSyntaxError:
        return text


# ==============================================================================
# MONOID HỮU HẠN
# ==============================================================================

class FiniteMonoid:
    """Monoid hữu hạn cho bởi danh sách nhãn và bảng nhân (mảng numpy chỉ đọc)."""

    def __init__(self, elements: Sequence[Label], one: int, zero: int | None, table: np.ndarray):
        self.elements: tuple[Label, ...] = tuple(elements)
        self.one = int(one)
        self.zero = None if zero is None else int(zero)
        table = np.array(table, dtype=np.int64, copy=True)
        table.setflags(write=False)
        self.table = table
        self._index = {label: i for i, label in enumerate(self.elements)}

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return self.order

    def index_of(self, label: Label) -> int:
        return self._index[label]

    def label_of(self, i: int) -> Label:
        return self.elements[i]

    def multiply(self, s: int, t: int) -> int:
        n = self.order
        if not (0 <= s < n and 0 <= t < n):
            raise IndexError(f"Chỉ số phần tử ngoài phạm vi [0, {n}): ({s}, {t})")
        return int(self.table[s, t])

    def product(self, items: Iterable[int]) -> int:
        acc = self.one
        for s in items:
            acc = int(self.table[acc, s])
            if acc == self.zero:
                return acc
        return acc

    def evaluate_word(self, w: Word) -> int:
        """Tích các nhãn một chữ cái; chữ cái không có nhãn được coi là 0 (nếu có 0)."""
        items = []
        for a in w:
            key = Word((a,))
            if key in self._index:
                items.append(self._index[key])
            elif self.zero is not None:
                return self.zero
            else:
                raise KeyError(f"Chữ cái {a} không phải phần tử của monoid")
        return self.product(items)

    def satisfies_relations(self, presentation: "Presentation") -> bool:
        for lhs, rhs in presentation.relations:
            left = self.evaluate_word(lhs)
            right = self.zero if rhs is ZERO else self.evaluate_word(rhs)
            if left != right:
                return False
        return True

    def same_as(self, other: "FiniteMonoid") -> bool:
        """Cùng nhãn, cùng thứ tự, cùng bảng (chứng chỉ ổn định của bao đóng)."""
        return (
            self.elements == other.elements
            and self.one == other.one
            and self.zero == other.zero
            and np.array_equal(self.table, other.table)
        )

    # ---- Xuất / nhập ----
    def to_json(self) -> dict:
        return {
            "elements": [_label_to_json(label) for label in self.elements],
            "one": self.one,
            "zero": self.zero,
            "table": self.table.tolist(),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), ensure_ascii=False)

    @classmethod
    def from_json(cls, obj: dict | str) -> "FiniteMonoid":
        if isinstance(obj, str):
            obj = json.loads(obj)
        elements = [_label_from_json(x) for x in obj["elements"]]
        return from_table(elements, obj["one"], obj.get("zero"), obj["table"])

    def to_dataframe(self) -> pd.DataFrame:
        labels = [label_text(x) for x in self.elements]
        data = [[labels[j] for j in row] for row in self.table.tolist()]
        return pd.DataFrame(data, index=labels, columns=labels)

    def __repr__(self) -> str:
        return f"FiniteMonoid(order={self.order}, zero={'yes' if self.zero is not None else 'no'})"


def from_table(elements: Sequence[Label], one: int, zero: int | None, table) -> FiniteMonoid:
    """Dựng FiniteMonoid và kiểm tra ngay mọi bất biến."""
    elements = list(elements)
    n = len(elements)
    if n == 0:
        raise MonoidError("Monoid phải có ít nhất một phần tử")
    arr = np.asarray(table)
    if arr.shape != (n, n):
        raise MonoidError(f"Bảng phải vuông cấp {n}, nhận được kích thước {arr.shape}")
    if not np.issubdtype(arr.dtype, np.integer):
        raise MonoidError("Bảng phải chứa chỉ số nguyên")
    if arr.min() < 0 or arr.max() >= n:
        raise MonoidError("Bảng chứa chỉ số ngoài phạm vi")
    if len(set(elements)) != n:
        raise DuplicateLabelsError("Các nhãn phần tử phải đôi một khác nhau")

    idx = np.arange(n)
    if not (0 <= one < n) or not (np.array_equal(arr[one], idx) and np.array_equal(arr[:, one], idx)):
        raise BadIdentityError(f"Phần tử {one} không phải đơn vị")
    if zero is not None:
        if not (0 <= zero < n) or not (np.all(arr[zero] == zero) and np.all(arr[:, zero] == zero)):
            raise BadZeroError(f"Phần tử {zero} không phải phần tử không")

    # (s·t)·u so với s·(t·u), từng hàng s
    for s in range(n):
        left = arr[arr[s]]
        right = arr[s][arr]
        bad = np.argwhere(left != right)
        if bad.size:
            t, u = bad[0]
            raise NonAssociativeError((s, int(t), int(u)))
    return FiniteMonoid(elements, one, zero, arr)


def multiply(M: FiniteMonoid, s: int, t: int) -> int:
    return M.multiply(s, t)


# ==============================================================================
# BIỂU DIỄN HỮU HẠN
# ==============================================================================

Relation = tuple[Word, Union[Word, ZeroMark]]


@dataclass(frozen=True)
class Presentation:
    generators: tuple[Letter, ...]
    relations: tuple[Relation, ...]
    adjoin_identity: bool = True
    has_zero: bool = True
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if not self.generators:
            raise EmptyGeneratorsError("Biểu diễn phải có ít nhất một phần tử sinh")
        gens = set(self.generators)
        for lhs, rhs in self.relations:
            for side in (lhs, rhs):
                if side is ZERO:
                    if not self.has_zero:
                        raise PresentationError("Quan hệ '= 0' chỉ dùng được khi có phần tử không")
                    continue
                if not isinstance(side, Word):
                    raise PresentationError(f"Vế quan hệ không hợp lệ: {side!r}")
                if not side.alf <= gens:
                    raise PresentationError(f"Quan hệ dùng chữ cái ngoài tập sinh: {format_word(side)}")
                if self.adjoin_identity and len(side) == 0:
                    raise PresentationError("Biểu diễn nửa nhóm (có thêm đơn vị) không được dùng vế rỗng")
            if lhs is ZERO:
                raise PresentationError("Vế trái của quan hệ phải là một từ")

    def __str__(self) -> str:
        gens = ", ".join(str(g) for g in self.generators)
        rels = ", ".join(f"{format_word(u)} = {v}" for u, v in self.relations)
        tail = " ∪ {1}" if self.adjoin_identity else ""
        return f"⟨{gens} | {rels}⟩{tail}"


def _w(text: str) -> Word:
    return parse_word(text)


PRESETS: dict[str, Presentation] = {
    "M_SCRIPT": Presentation(
        generators=(Letter("a"), Letter("e")),
        relations=((_w("ee"), _w("e")), (_w("aaa"), ZERO), (_w("ae"), ZERO), (_w("eaa"), _w("aa"))),
        name="M_SCRIPT",
    ),
    "A21": Presentation(
        generators=(Letter("a"), Letter("b")),
        relations=((_w("aa"), ZERO), (_w("aba"), _w("a")), (_w("bab"), _w("b")), (_w("bb"), _w("b"))),
        name="A21",
    ),
    "B21": Presentation(
        generators=(Letter("a"), Letter("b")),
        relations=((_w("aa"), ZERO), (_w("bb"), ZERO), (_w("aba"), _w("a")), (_w("bab"), _w("b"))),
        name="B21",
    ),
    "TRIVIAL": Presentation(
        generators=(Letter("a"),),
        relations=((_w("a"), EMPTY_WORD),),
        adjoin_identity=False,
        has_zero=False,
        name="TRIVIAL",
    ),
}


def preset(name: str) -> Presentation:
    key = str(name).strip().upper()
    if key not in PRESETS:
        raise UnknownPresetError(f"Không có biểu diễn mẫu '{name}'. Có sẵn: {', '.join(PRESETS)}")
    return PRESETS[key]


class _Unstable(Exception):
    def __init__(self, order: int):
        super().__init__(order)
        self.order = order


class _UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, a: int) -> int:
        root = a
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[a] != root:
            self.parent[a], a = root, self.parent[a]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            # gốc luôn là chỉ số nhỏ hơn = từ nhỏ hơn theo shortlex
            if ra < rb:
                self.parent[rb] = ra
            else:
                self.parent[ra] = rb


def _closure(p: Presentation, max_len: int) -> FiniteMonoid:
    gens = sorted(p.generators)
    universe: list[tuple[Letter, ...]] = [w for k in range(max_len + 1) for w in product(gens, repeat=k)]
    index = {w: i for i, w in enumerate(universe)}
    zero_node = len(universe) if p.has_zero else None
    uf = _UnionFind(len(universe) + (1 if p.has_zero else 0))

    for i, w in enumerate(universe):
        for lhs, rhs in p.relations:
            u = lhs.letters
            for pos in range(len(w) - len(u) + 1):
                if w[pos:pos + len(u)] != u:
                    continue
                if rhs is ZERO:
                    uf.union(i, zero_node)
                    continue
                replaced = w[:pos] + rhs.letters + w[pos + len(u):]
                if len(replaced) <= max_len:
                    uf.union(i, index[replaced])

    zero_root = uf.find(zero_node) if zero_node is not None else None
    roots: list[int] = []
    seen = set()
    for i in range(len(universe)):
        r = uf.find(i)
        if r not in seen and r != zero_root:
            seen.add(r)
            roots.append(r)
    # universe theo shortlex nên gốc chính là đại diện nhỏ nhất của lớp
    reps = [universe[r] for r in roots]
    element_of_root = {r: k for k, r in enumerate(roots)}
    zero_index = len(roots) if zero_root is not None else None
    n = len(roots) + (1 if zero_root is not None else 0)

    def class_of(w: tuple[Letter, ...]) -> int:
        r = uf.find(index[w])
        return zero_index if r == zero_root else element_of_root[r]

    # tác động phải của phần tử sinh lên các lớp
    right = np.zeros((n, len(gens)), dtype=np.int64)
    for k, rep in enumerate(reps):
        if len(rep) + 1 > max_len:
            raise _Unstable(n)
        for g_idx, g in enumerate(gens):
            right[k, g_idx] = class_of(rep + (g,))
    if zero_index is not None:
        right[zero_index, :] = zero_index

    gen_pos = {g: i for i, g in enumerate(gens)}
    table = np.zeros((n, n), dtype=np.int64)
    for c in range(n):
        for d, rep in enumerate(reps):
            acc = c
            for g in rep:
                acc = right[acc, gen_pos[g]]
            table[c, d] = acc
        if zero_index is not None:
            table[c, zero_index] = zero_index

    labels: list[Label] = [Word(rep) for rep in reps]
    if zero_index is not None:
        labels.append(ZERO_LABEL)
    one = class_of(())
    return from_table(labels, one, zero_index, table)


def from_presentation(p: Presentation, max_len: int | None = None) -> FiniteMonoid:
    """
    Dựng monoid từ biểu diễn: lấy các lớp tương đẳng của từ độ dài <= max_len, rồi dựng lại
    với max_len+1; chỉ chấp nhận khi hai bảng trùng nhau.
    """
    max_len = config.PRESENTATION_MAX_LEN if max_len is None else int(max_len)
    if max_len < 1:
        raise PresentationError("max_len phải >= 1")
    results: list[FiniteMonoid | None] = []
    orders: list[int] = []
    for bound in (max_len, max_len + 1):
        try:
            M = _closure(p, bound)
        except _Unstable as e:
            # số lớp đã thấy khi tác động phải vượt quá bound
            results.append(None)
            orders.append(e.order)
            continue
        results.append(M)
        orders.append(M.order)
    first, second = results
    if first is None or second is None or not first.same_as(second):
        raise NotStabilizedError(max_len, tuple(orders))
    logger.debug("Biểu diễn %s ổn định tại max_len=%d, cấp %d", p.name or p, max_len, first.order)
    return first


def element_labels(M: FiniteMonoid) -> list[str]:
    return [label_text(x) for x in M.elements]
