# -*- coding: utf-8 -*-
"""
identities.py
- Đồng nhất thức u ≈ v, cú pháp văn bản và các bộ đồng nhất thức mẫu.
- Phép thế (biến -> từ / 0 / phần tử) và phép tính giá trị trong monoid hữu hạn.
Các bộ kiểm tra nằm trong thư mục checkers/.
"""
from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Iterable, Mapping, Union

from errors import (
    BadArgumentError,
    MissingVariableError,
    UnknownBasisError,
    WordSyntaxError,
    ZeroWithoutZeroError,
)
from monoid import ZERO, FiniteMonoid, ZeroMark, label_text
from rees import ReesQuotient, element_of
from words import (
    X,
    Letter,
    Word,
    delete_letter,
    format_word,
    generate_wn,
    parse_word,
)

HOLDS = "HOLDS"
FAILS = "FAILS"

ZERO_MARK = ZERO

_EQ_RE = re.compile(r"=|≈")


# ==============================================================================
# ĐỒNG NHẤT THỨC
# ==============================================================================

@dataclass(frozen=True)
class Identity:
    lhs: Word
    rhs: Word

    @property
    def alf(self) -> frozenset[Letter]:
        return self.lhs.alf | self.rhs.alf

    @property
    def variables(self) -> list[Letter]:
        return sorted(self.alf)

    def __iter__(self):
        return iter((self.lhs, self.rhs))

    def __str__(self) -> str:
        return format_identity(self)


def parse_identity(text: str) -> Identity:
    """`u = v` (chấp nhận cả `≈`); mỗi vế theo cú pháp của words, `x^3` ở dạng gọn là lũy thừa."""
    if not isinstance(text, str):
        raise WordSyntaxError("Đầu vào phải là chuỗi", repr(text), 0)
    parts = _EQ_RE.split(text)
    if len(parts) != 2:
        pos = text.find("=") if len(parts) < 2 else [m.start() for m in _EQ_RE.finditer(text)][1]
        raise WordSyntaxError("Đồng nhất thức phải có đúng một dấu '='", text, max(pos, 0))
    left_text, right_text = parts
    offset_right = len(left_text) + 1
    sides = []
    for side_text, offset in ((left_text, 0), (right_text, offset_right)):
        try:
            sides.append(parse_word(side_text))
        except WordSyntaxError as e:
            raise WordSyntaxError("Vế đồng nhất thức không hợp lệ", text, offset + e.position) from e
    return Identity(*sides)


def format_identity(identity: Identity) -> str:
    return f"{format_word(identity.lhs)} = {format_word(identity.rhs)}"


def deletion_invariant(identity: Identity, x: Letter) -> bool:
    """u_x == v_x: xóa x ở hai vế cho cùng một từ."""
    return delete_letter(identity.lhs, x) == delete_letter(identity.rhs, x)


# ---- Bộ đồng nhất thức mẫu ----
BASES: dict[str, tuple[str, ...]] = {
    "SIGMA": (
        "x^3 = x^4",
        "x^3y = yx^3",
        "yzx^3 = xyxzx",
        "xyzxty = yxzxty",
        "xzytxy = xzytyx",
    ),
    "LEE_LI": (
        "x^3 = x^4",
        "yzx^3 = xyxzx",
        "x^3y^3 = y^3x^3",
        "ytx^3y = ytyx^3",
        "xyzxty = yxzxty",
        "xzytxy = xzytyx",
    ),
}


def basis(name: str) -> list[Identity]:
    key = str(name).strip().upper()
    if key not in BASES:
        raise UnknownBasisError(f"Không có bộ đồng nhất thức '{name}'. Có sẵn: {', '.join(BASES)}")
    return [parse_identity(text) for text in BASES[key]]


def separation_identity(n: int) -> Identity:
    """w_n ≈ x x (w_n)_x"""
    wn = generate_wn(n)
    return Identity(wn, Word((X, X)) + delete_letter(wn, X))


_RANDOM_VARIABLES = (Letter("x"), Letter("y"), Letter("z"))


def random_identity(rng: random.Random, max_vars: int = 3, max_len: int = 6) -> Identity:
    """
    Đồng nhất thức ngẫu nhiên (tối đa max_vars biến, mỗi vế dài tối đa max_len). Trộn ba
    kiểu: hai vế độc lập, hoán vị vế trái, và đổi số mũ của một khối chữ cái.
    """
    k = rng.randint(1, max(1, min(max_vars, len(_RANDOM_VARIABLES))))
    pool = _RANDOM_VARIABLES[:k]

    def rand_word(lo: int = 1) -> list[Letter]:
        return [rng.choice(pool) for _ in range(rng.randint(lo, max_len))]

    mode = rng.random()
    lhs = rand_word()
    if mode < 0.4:
        rhs = rand_word()
    elif mode < 0.75:
        rhs = lhs[:]
        rng.shuffle(rhs)
    else:
        rhs = lhs[:]
        i = rng.randrange(len(rhs))
        if len(rhs) < max_len and rng.random() < 0.5:
            rhs.insert(i, rhs[i])
        elif len(rhs) > 1:
            del rhs[i]
    return Identity(Word(lhs), Word(rhs))


# ==============================================================================
# PHÉP THẾ
# ==============================================================================

Value = Union[Word, ZeroMark, int]


def _value_key(value: Value) -> tuple:
    if isinstance(value, Word):
        return (0, value.sort_key)
    if isinstance(value, ZeroMark):
        return (1, ())
    return (2, int(value))


class Substitution(Mapping):
    """Ánh xạ bất biến biến -> từ, ZERO_MARK, hoặc chỉ số phần tử."""

    def __init__(self, assignment: Mapping[Letter, Value] | Iterable[tuple[Letter, Value]] = ()):
        items = dict(assignment)
        for var, value in items.items():
            if not isinstance(var, Letter):
                raise BadArgumentError(f"Biến phải là Letter, nhận được {var!r}")
            if not isinstance(value, (Word, ZeroMark, int)) or isinstance(value, bool):
                raise BadArgumentError(f"Giá trị của {var} không hợp lệ: {value!r}")
        self._items = tuple(sorted(items.items(), key=lambda kv: kv[0].sort_key))
        self._dict = dict(self._items)

    @classmethod
    def identity_on(cls, alphabet: Iterable[Letter]) -> "Substitution":
        return cls({a: Word((a,)) for a in alphabet})

    def __getitem__(self, var: Letter) -> Value:
        return self._dict[var]

    def __iter__(self):
        return iter(self._dict)

    def __len__(self) -> int:
        return len(self._dict)

    def __eq__(self, other) -> bool:
        if isinstance(other, Substitution):
            return self._items == other._items
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._items)

    def sort_key(self) -> tuple:
        return tuple(_value_key(v) for _, v in self._items)

    def apply(self, w: Word) -> Word:
        """φ(w) như một từ; chỉ dùng khi mọi giá trị cần đến đều là từ."""
        out: list[Letter] = []
        for a in w:
            if a not in self._dict:
                raise MissingVariableError(f"Phép thế thiếu biến {a}")
            value = self._dict[a]
            if not isinstance(value, Word):
                raise BadArgumentError(f"Biến {a} không được gán một từ")
            out.extend(value.letters)
        return Word(out)

    def with_labels(self, M: FiniteMonoid) -> "Substitution":
        """Đổi giá trị chỉ số sang nhãn (từ) khi có thể; phần tử không thành ZERO_MARK."""
        out: dict[Letter, Value] = {}
        for var, value in self._items:
            if isinstance(value, int) and not isinstance(value, bool):
                if value == M.zero:
                    out[var] = ZERO_MARK
                elif isinstance(M.label_of(value), Word):
                    out[var] = M.label_of(value)
                else:
                    out[var] = value
            else:
                out[var] = value
        return Substitution(out)

    def to_json(self, M: FiniteMonoid | None = None) -> dict[str, str]:
        out = {}
        for var, value in self._items:
            if isinstance(value, Word):
                out[str(var)] = format_word(value)
            elif isinstance(value, ZeroMark):
                out[str(var)] = "0"
            elif M is not None:
                out[str(var)] = label_text(M.label_of(value))
            else:
                out[str(var)] = f"#{value}"
        return out

    def __str__(self) -> str:
        body = ", ".join(f"{k}->{v}" for k, v in self.to_json().items())
        return "{" + body + "}"

    def __repr__(self) -> str:
        return f"Substitution({self})"


# ==============================================================================
# TÍNH GIÁ TRỊ
# ==============================================================================

def _monoid_of(M: FiniteMonoid | ReesQuotient) -> FiniteMonoid:
    return M.monoid if isinstance(M, ReesQuotient) else M


def value_element(value: Value, M: FiniteMonoid | ReesQuotient) -> int:
    monoid = _monoid_of(M)
    if isinstance(value, ZeroMark):
        if monoid.zero is None:
            raise ZeroWithoutZeroError("Monoid không có phần tử không nhưng phép thế dùng ZERO_MARK")
        return monoid.zero
    if isinstance(value, Word):
        if isinstance(M, ReesQuotient):
            return element_of(M, value)
        if len(value) == 0:
            return monoid.one
        try:
            return monoid.index_of(value)
        except KeyError:
            return monoid.evaluate_word(value)
    if not 0 <= value < monoid.order:
        raise BadArgumentError(f"Chỉ số phần tử ngoài phạm vi: {value}")
    return int(value)


def evaluate(u: Word, phi: Mapping[Letter, Value], M: FiniteMonoid | ReesQuotient) -> int:
    """Tích từ trái sang phải của ảnh các chữ cái; ZERO_MARK trên bất kỳ chữ nào cho ngay 0."""
    monoid = _monoid_of(M)
    missing = [a for a in sorted(u.alf) if a not in phi]
    if missing:
        raise MissingVariableError(f"Phép thế thiếu biến: {', '.join(str(a) for a in missing)}")
    images = {a: value_element(phi[a], M) for a in u.alf}
    if monoid.zero is not None and any(v == monoid.zero for v in images.values()):
        return monoid.zero
    table = monoid.table
    acc = monoid.one
    for a in u:
        acc = int(table[acc, images[a]])
        if acc == monoid.zero:
            break
    return acc


# ==============================================================================
# KẾT QUẢ KIỂM TRA
# ==============================================================================

@dataclass(frozen=True)
class CheckOutcome:
    status: str
    witness: Substitution | None = None
    evaluations: int = 0
    method: str = ""

    @property
    def holds(self) -> bool:
        return self.status == HOLDS

    def to_json(self, M: FiniteMonoid | None = None) -> dict:
        return {
            "status": self.status,
            "witness": self.witness.to_json(M) if self.witness is not None else None,
            "evaluations": self.evaluations,
            "method": self.method,
        }


def witness_is_valid(identity: Identity, outcome: CheckOutcome, M: FiniteMonoid | ReesQuotient) -> bool:
    """Tính lại hai vế theo nhân chứng: phải ra hai phần tử khác nhau."""
    if outcome.status != FAILS or outcome.witness is None:
        return False
    phi = outcome.witness
    return evaluate(identity.lhs, phi, M) != evaluate(identity.rhs, phi, M)
