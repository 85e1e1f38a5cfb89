# -*- coding: utf-8 -*-
"""
Các vị từ cấu trúc trên phép khớp:
- check_star_property: ảnh của chữ bội c của w_n hoặc rỗng, hoặc là một chữ bội d của w_k
  mà hai lần xuất hiện đầu của c rơi đúng vào hai lần xuất hiện đầu của d.
- check_no_div_instance: đoạn ảnh của lần xuất hiện đầu của x trong u = a·φ(w)·b không
  chứa lần xuất hiện đầu của chữ có độ sâu (trong u) nhỏ hơn D(w, x).
"""
from __future__ import annotations

import logging
import random
from typing import Mapping

from errors import InvalidMatchError, MissingVariableError
from identities import Substitution
from words import (
    INFINITY,
    Letter,
    Word,
    alphabet_profile,
    depth_map,
    first_positions,
    occurrence_positions,
)

logger = logging.getLogger(__name__)


def _word_images(w: Word, phi: Mapping[Letter, object]) -> dict[Letter, Word]:
    missing = sorted(a for a in w.alf if a not in phi)
    if missing:
        raise MissingVariableError(f"Phép thế thiếu biến: {', '.join(str(a) for a in missing)}")
    images = {}
    for a in w.alf:
        value = phi[a]
        if not isinstance(value, Word):
            raise InvalidMatchError(f"Biến {a} phải được gán một từ")
        images[a] = value
    return images


def _occurrences_of(image: Word, wk: Word) -> list[int]:
    m, seq, target = len(image), image.letters, wk.letters
    return [s for s in range(len(target) - m + 1) if target[s:s + m] == seq]


# ==============================================================================
# TÍNH CHẤT (∗)
# ==============================================================================

def check_star_property(wn: Word, wk: Word, phi: Mapping[Letter, Word], start: int | None = None) -> bool:
    """
    start là vị trí (từ 0) của φ(wn) trong wk; bỏ trống thì mọi vị trí khớp đều phải thỏa.
    """
    images = _word_images(wn, phi)
    image = Word(a for c in wn for a in images[c].letters)
    if start is None:
        placements = _occurrences_of(image, wk)
        if not placements:
            raise InvalidMatchError(f"φ({wn}) không phải thừa số của {wk}")
    else:
        if wk.letters[start:start + len(image)] != image.letters or start < 0:
            raise InvalidMatchError(f"φ({wn}) không nằm ở vị trí {start} của {wk}")
        placements = [start]

    multiple_n = alphabet_profile(wn).multiple
    multiple_k = alphabet_profile(wk).multiple
    for s in placements:
        # vị trí (từ 1) trong wk nhận ảnh của từng lần xuất hiện của mỗi chữ
        starts: dict[Letter, list[int]] = {}
        pos = s
        for c in wn:
            starts.setdefault(c, []).append(pos + 1)
            pos += len(images[c])
        for c in multiple_n:
            img = images[c]
            if len(img) == 0:
                continue
            if len(img) != 1 or img[0] not in multiple_k:
                return False
            d = img[0]
            if tuple(starts[c][:2]) != occurrence_positions(wk, d)[:2]:
                return False
    return True


# ==============================================================================
# KHÔNG CHIA ĐỘ SÂU
# ==============================================================================

def check_no_div_instance(w: Word, phi: Mapping[Letter, Word], a: Word, b: Word) -> bool:
    images = _word_images(w, phi)
    letters: list[Letter] = list(a.letters)
    segment: dict[Letter, tuple[int, int]] = {}
    for x in w:
        lo = len(letters)
        letters.extend(images[x].letters)
        # đoạn [lo+1, hi] tính từ 1, chỉ lấy lần xuất hiện đầu
        segment.setdefault(x, (lo + 1, len(letters)))
    letters.extend(b.letters)
    u = Word(letters)

    depth_w, depth_u = depth_map(w), depth_map(u)
    first_at = {p: y for y, p in first_positions(u).items()}
    for x, dx in depth_w.items():
        if dx == 0 or dx == INFINITY:
            continue
        lo, hi = segment[x]
        for p in range(lo, hi + 1):
            y = first_at.get(p)
            if y is not None and depth_u[y] < dx:
                logger.debug("no-div sai: w=%s, x=%s, y=%s, u=%s", w, x, y, u)
                return False
    return True


_PATTERN_LETTERS = tuple(Letter(c) for c in "xyzts")
_TARGET_LETTERS = tuple(Letter(c) for c in "abcd")


def random_no_div_instance(rng: random.Random) -> tuple[Word, Substitution, Word, Word]:
    """Một bộ (w, φ, a, b) ngẫu nhiên: w dài 1..8 trên 2..5 biến, ảnh và a, b dài 0..3."""
    pool = _PATTERN_LETTERS[:rng.randint(2, len(_PATTERN_LETTERS))]
    w = Word(rng.choice(pool) for _ in range(rng.randint(1, 8)))

    def rand_target() -> Word:
        return Word(rng.choice(_TARGET_LETTERS) for _ in range(rng.randint(0, 3)))

    phi = Substitution({x: rand_target() for x in sorted(w.alf)})
    return w, phi, rand_target(), rand_target()
