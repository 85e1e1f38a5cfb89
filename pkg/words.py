# -*- coding: utf-8 -*-
"""
words.py
- Chữ cái có chỉ số dưới/trên, từ hữu hạn và cú pháp văn bản của chúng.
- Độ sâu của chữ cái, họ từ w_n và các vị từ cấu trúc trên từ.
"""
from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass
from functools import cached_property, total_ordering
from typing import Iterable, Iterator, Mapping

from errors import BadArgumentError, WordSyntaxError

INFINITY = math.inf
EMPTY_TEXT = "1"

_BASE_RE = re.compile(r"[a-z]+")
_TOKEN_RE = re.compile(r"([a-z]+)(?:_(\d+))?(?:\^(\d+))?")
_COMPACT_RE = re.compile(r"([a-z])(?:\^(\d+))?")


# ==============================================================================
# CHỮ CÁI
# ==============================================================================

@total_ordering
@dataclass(frozen=True)
class Letter:
    base: str
    sub: int | None = None
    sup: int | None = None

    def __post_init__(self):
        if not isinstance(self.base, str) or not _BASE_RE.fullmatch(self.base):
            raise WordSyntaxError("Tên chữ cái phải là chữ thường", str(self.base), 0)
        for v in (self.sub, self.sup):
            if v is not None and (not isinstance(v, int) or isinstance(v, bool) or v < 0):
                raise WordSyntaxError("Chỉ số phải là số nguyên không âm", str(v), 0)

    @cached_property
    def sort_key(self) -> tuple:
        # chỉ số vắng mặt đứng trước mọi chỉ số có mặt
        return (
            self.base,
            self.sub is not None, self.sub or 0,
            self.sup is not None, self.sup or 0,
        )

    def __lt__(self, other):
        if not isinstance(other, Letter):
            return NotImplemented
        return self.sort_key < other.sort_key

    @property
    def is_plain(self) -> bool:
        return len(self.base) == 1 and self.sub is None and self.sup is None

    def __str__(self) -> str:
        s = self.base
        if self.sub is not None:
            s += f"_{self.sub}"
        if self.sup is not None:
            s += f"^{self.sup}"
        return s

    def __repr__(self) -> str:
        return f"Letter({self})"


# ==============================================================================
# TỪ
# ==============================================================================

@total_ordering
class Word:
    """Dãy chữ cái bất biến. Thứ tự mặc định là shortlex."""

    def __init__(self, letters: Iterable[Letter] = ()):
        letters = tuple(letters)
        for a in letters:
            if not isinstance(a, Letter):
                raise TypeError(f"Word chỉ nhận Letter, nhận được {type(a).__name__}")
        self.letters = letters
        self._hash = hash(letters)

    @classmethod
    def parse(cls, text: str) -> "Word":
        return parse_word(text)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Word(self.letters[item])
        return self.letters[item]

    def __add__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        return Word(self.letters + other.letters)

    def __mul__(self, k: int) -> "Word":
        return Word(self.letters * k)

    def __eq__(self, other) -> bool:
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "Word") -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return shortlex_key(self) < shortlex_key(other)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def count(self, x: Letter) -> int:
        return self.letters.count(x)

    @cached_property
    def alf(self) -> frozenset[Letter]:
        return frozenset(self.letters)

    @cached_property
    def sort_key(self) -> tuple:
        return (len(self.letters), tuple(a.sort_key for a in self.letters))

    def __str__(self) -> str:
        return format_word(self)

    def __repr__(self) -> str:
        return f"Word({format_word(self)!r})"


EMPTY_WORD = Word()


def shortlex_key(w: Word) -> tuple:
    return w.sort_key


# ==============================================================================
# CÚ PHÁP VĂN BẢN
# ==============================================================================

def is_dotted(text: str) -> bool:
    return "." in text or "_" in text


def parse_word(text: str) -> Word:
    """
    Đọc một từ ở dạng gọn (`aabb`, cho phép lũy thừa `a^2b^2`) hoặc dạng chấm
    (`z_1.t_1.x.y_1^0`). Từ rỗng viết là `1`.
    """
    if not isinstance(text, str):
        raise WordSyntaxError("Đầu vào phải là chuỗi", repr(text), 0)
    stripped = text.strip()
    if stripped == "":
        raise WordSyntaxError("Chuỗi rỗng, từ rỗng phải viết là '1'", text, 0)
    if stripped == EMPTY_TEXT:
        return EMPTY_WORD
    if is_dotted(stripped):
        return _parse_dotted(stripped)
    return _parse_compact(stripped)


def _parse_dotted(text: str) -> Word:
    tokens = text.split(".")
    # cho phép một dấu chấm ở cuối (xem format_word)
    if len(tokens) > 1 and tokens[-1].strip() == "":
        tokens = tokens[:-1]
    out: list[Letter] = []
    pos = 0
    for raw in tokens:
        tok = raw.strip()
        m = _TOKEN_RE.fullmatch(tok)
        if not m:
            raise WordSyntaxError("Ký hiệu không hợp lệ ở dạng chấm", text, pos)
        base, sub, sup = m.groups()
        out.append(Letter(base, int(sub) if sub is not None else None, int(sup) if sup is not None else None))
        pos += len(raw) + 1
    return Word(out)


def _parse_compact(text: str) -> Word:
    out: list[Letter] = []
    i = 0
    while i < len(text):
        if text[i].isspace():
            i += 1
            continue
        m = _COMPACT_RE.match(text, i)
        if not m:
            raise WordSyntaxError("Ký tự không hợp lệ ở dạng gọn", text, i)
        letter = Letter(m.group(1))
        power = int(m.group(2)) if m.group(2) is not None else 1
        out.extend([letter] * power)
        i = m.end()
    return Word(out)


def format_word(w: Word) -> str:
    """Dạng gọn nếu mọi chữ cái đều đơn giản, ngược lại dạng chấm."""
    if len(w) == 0:
        return EMPTY_TEXT
    if all(a.is_plain for a in w):
        return "".join(a.base for a in w)
    text = ".".join(str(a) for a in w)
    if not is_dotted(text):
        # một chữ cái chỉ có chỉ số trên, ví dụ y^2: thêm '.' để không bị đọc thành lũy thừa
        text += "."
    return text


# ==============================================================================
# BẢNG CHỮ CÁI, XÓA CHỮ, THỪA SỐ, VỊ TRÍ
# ==============================================================================

@dataclass(frozen=True)
class AlphabetProfile:
    alf: frozenset[Letter]
    simple: frozenset[Letter]
    multiple: frozenset[Letter]


def alphabet_profile(w: Word) -> AlphabetProfile:
    counts = Counter(w)
    simple = frozenset(a for a, c in counts.items() if c == 1)
    multiple = frozenset(a for a, c in counts.items() if c >= 2)
    return AlphabetProfile(alf=frozenset(counts), simple=simple, multiple=multiple)


def delete_letter(w: Word, x: Letter) -> Word:
    return Word(a for a in w if a != x)


def factors(w: Word) -> tuple[Word, ...]:
    """Mọi thừa số liên tiếp của w (kể cả từ rỗng), không lặp, theo shortlex."""
    seq = w.letters
    n = len(seq)
    seen = {seq[i:j] for i in range(n) for j in range(i + 1, n + 1)}
    seen.add(())
    return tuple(sorted((Word(s) for s in seen), key=shortlex_key))


def occurrence_positions(w: Word, x: Letter) -> tuple[int, ...]:
    return tuple(i for i, a in enumerate(w, start=1) if a == x)


def first_positions(w: Word) -> dict[Letter, int]:
    first: dict[Letter, int] = {}
    for i, a in enumerate(w, start=1):
        first.setdefault(a, i)
    return first


def last_positions(w: Word) -> dict[Letter, int]:
    return {a: i for i, a in enumerate(w, start=1)}


# ==============================================================================
# ĐỘ SÂU
# ==============================================================================

class DepthMap(Mapping):
    """Ánh xạ chữ cái -> độ sâu (số nguyên không âm hoặc INFINITY)."""

    def __init__(self, entries: Mapping[Letter, float | int]):
        self._entries = dict(sorted(entries.items(), key=lambda kv: kv[0].sort_key))

    def __getitem__(self, key: Letter):
        return self._entries[key]

    def __iter__(self):
        return iter(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __eq__(self, other) -> bool:
        if isinstance(other, Mapping):
            return dict(self._entries) == dict(other)
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self._entries.items()))

    def to_json(self) -> dict[str, int | str]:
        return {str(a): ("inf" if d == INFINITY else int(d)) for a, d in self._entries.items()}

    def __repr__(self) -> str:
        body = ", ".join(f"{a}: {'∞' if d == INFINITY else d}" for a, d in self._entries.items())
        return f"DepthMap({{{body}}})"


def depth_map(w: Word) -> DepthMap:
    """
    Điểm bất động của định nghĩa quy nạp: vòng 0 gán 0 cho chữ cái đơn; vòng k gán k
    cho chữ cái bội chưa được gán mà giữa lần xuất hiện thứ nhất và thứ hai của nó
    (ngặt) có lần xuất hiện đầu tiên của một chữ cái độ sâu k-1. Còn lại là INFINITY.
    """
    positions: dict[Letter, list[int]] = {}
    for i, a in enumerate(w, start=1):
        positions.setdefault(a, []).append(i)
    first = {a: p[0] for a, p in positions.items()}

    depth: dict[Letter, float | int] = {a: 0 for a, p in positions.items() if len(p) == 1}
    frontier = set(depth)
    k = 0
    while frontier:
        k += 1
        newly = set()
        for a, p in positions.items():
            if a in depth:
                continue
            lo, hi = p[0], p[1]
            if any(lo < first[y] < hi for y in frontier):
                newly.add(a)
        for a in newly:
            depth[a] = k
        frontier = newly
    for a in positions:
        depth.setdefault(a, INFINITY)
    return DepthMap(depth)


def max_depth(w: Word) -> int | None:
    finite = [d for d in depth_map(w).values() if d != INFINITY]
    return int(max(finite)) if finite else None


# ==============================================================================
# HỌ TỪ w_n
# ==============================================================================

def z(i: int) -> Letter:
    return Letter("z", i)


def t(i: int) -> Letter:
    return Letter("t", i)


def y(i: int, k: int) -> Letter:
    return Letter("y", i, k)


X = Letter("x")


def generate_wn(n: int) -> Word:
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise BadArgumentError(f"w_n chỉ định nghĩa với n >= 1, nhận được {n!r}")
    out: list[Letter] = []
    for i in range(1, n + 1):
        out += [z(i), t(i)]
    out.append(X)
    for i in range(1, n + 1):
        out += [z(i), y(i, n)]
    out.append(X)
    for j in range(1, n + 1):
        for i in range(1, n + 1):
            out += [y(i, n - j), y(i, n + 1 - j)]
    return Word(out)


def wn_expected_depths(n: int) -> dict[Letter, int]:
    """Bảng độ sâu đã biết của w_n: x -> n+1, y_i^(k) -> k, t_i -> 0, z_i -> 1."""
    expected: dict[Letter, int] = {X: n + 1}
    for i in range(1, n + 1):
        expected[t(i)] = 0
        expected[z(i)] = 1
        for k in range(0, n + 1):
            expected[y(i, k)] = k
    return expected


def wn_simple_letters(n: int) -> frozenset[Letter]:
    return frozenset([t(i) for i in range(1, n + 1)] + [y(i, 0) for i in range(1, n + 1)])


# ==============================================================================
# VỊ TỪ CẤU TRÚC
# ==============================================================================

def is_square_free(w: Word) -> bool:
    seq = w.letters
    n = len(seq)
    for i in range(n):
        for half in range(1, (n - i) // 2 + 1):
            if seq[i:i + half] == seq[i + half:i + 2 * half]:
                return False
    return True


@dataclass(frozen=True)
class Length2Profile:
    all_unique: bool
    all_first_last: bool


def length2_profile(w: Word) -> Length2Profile:
    if len(w) < 2:
        raise BadArgumentError("length2_profile cần từ có độ dài >= 2")
    seq = w.letters
    pairs = Counter(zip(seq, seq[1:]))
    first = first_positions(w)
    last = last_positions(w)

    def is_first(p: int) -> bool:
        return first[seq[p - 1]] == p

    def is_last(p: int) -> bool:
        return last[seq[p - 1]] == p

    first_last = all(
        (is_first(p) and is_last(p + 1)) or (is_last(p) and is_first(p + 1))
        for p in range(1, len(seq))
    )
    return Length2Profile(all_unique=all(c == 1 for c in pairs.values()), all_first_last=first_last)


def max_occurrences(w: Word) -> int:
    counts = Counter(w)
    return max(counts.values()) if counts else 0


def min_nonlinear_simplefree_factor(w: Word) -> int | None:
    """Độ dài nhỏ nhất của thừa số có chữ lặp và không chứa chữ đơn của w; None nếu không có."""
    simple = alphabet_profile(w).simple
    seq = w.letters
    best: int | None = None
    for i in range(len(seq)):
        seen: set[Letter] = set()
        for j in range(i, len(seq)):
            a = seq[j]
            if a in simple:
                break
            if a in seen:
                length = j - i + 1
                if best is None or length < best:
                    best = length
                break
            seen.add(a)
    return best


# ==============================================================================
# TẬP TỪ
# ==============================================================================

class WordSet:
    """Tập hữu hạn các từ khác rỗng, duyệt theo shortlex."""

    def __init__(self, words: Iterable[Word] = ()):
        unique = set()
        for w in words:
            if not isinstance(w, Word):
                raise TypeError(f"WordSet chỉ nhận Word, nhận được {type(w).__name__}")
            if len(w) == 0:
                raise BadArgumentError("WordSet không chứa từ rỗng")
            unique.add(w)
        self.words: tuple[Word, ...] = tuple(sorted(unique, key=shortlex_key))
        self._members = frozenset(unique)

    @classmethod
    def of_wn(cls, ns: Iterable[int]) -> "WordSet":
        return cls(generate_wn(n) for n in ns)

    def __iter__(self) -> Iterator[Word]:
        return iter(self.words)

    def __len__(self) -> int:
        return len(self.words)

    def __contains__(self, w) -> bool:
        return w in self._members

    def __eq__(self, other) -> bool:
        return isinstance(other, WordSet) and self.words == other.words

    def __hash__(self) -> int:
        return hash(self.words)

    def issubset(self, other: "WordSet") -> bool:
        return self._members <= other._members

    @cached_property
    def factor_set(self) -> frozenset[Word]:
        out: set[Word] = {EMPTY_WORD}
        for w in self.words:
            out.update(factors(w))
        return frozenset(out)

    def __str__(self) -> str:
        return ",".join(format_word(w) for w in self.words) if self.words else "∅"

    def __repr__(self) -> str:
        return f"WordSet({str(self)!r})"
