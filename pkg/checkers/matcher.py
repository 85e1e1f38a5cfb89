# -*- coding: utf-8 -*-
"""
Khớp mẫu có biến: tìm mọi phép thế φ sao cho φ(u) là thừa số của w.
Quay lui theo vị trí bắt đầu của φ(u) trong w, rồi theo đoạn gán cho từng biến.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterator

import config
from errors import BadArgumentError, BudgetExceededError
from identities import Substitution
from words import Letter, Word

logger = logging.getLogger(__name__)


class SearchBudget:
    """Đếm số nút quay lui; vượt giới hạn thì ném BudgetExceededError."""

    def __init__(self, limit: int | None = None):
        self.limit = int(limit if limit is not None else config.MATCHER_BUDGET)
        self.nodes = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.limit:
            raise BudgetExceededError(examined=self.nodes - 1, limit=self.limit)


@dataclass(frozen=True)
class Match:
    substitution: Substitution
    start: int  # vị trí (tính từ 0) của φ(u) trong w

    def sort_key(self) -> tuple:
        return (self.substitution.sort_key(), self.start)


def _remaining_counts(seq: tuple[Letter, ...]) -> list[dict[Letter, int]]:
    # rest[i][v] = số lần v xuất hiện trong seq[i:]
    rest: list[dict[Letter, int]] = [dict() for _ in range(len(seq) + 1)]
    for i in range(len(seq) - 1, -1, -1):
        rest[i] = dict(rest[i + 1])
        rest[i][seq[i]] = rest[i].get(seq[i], 0) + 1
    return rest


def _last_starts(target: tuple[Letter, ...]) -> dict[tuple[Letter, ...], int]:
    # thừa số -> vị trí bắt đầu lớn nhất của nó trong target
    last: dict[tuple[Letter, ...], int] = {}
    n = len(target)
    for i in range(n):
        for j in range(i + 1, n + 1):
            last[target[i:j]] = i
    return last


def _extend(
    pattern: tuple[Letter, ...],
    target: tuple[Letter, ...],
    rest: list[dict[Letter, int]],
    last: dict[tuple[Letter, ...], int],
    i: int,
    pos: int,
    binding: dict[Letter, tuple[Letter, ...]],
    lo: int,
    budget: SearchBudget,
) -> Iterator[dict[Letter, tuple[Letter, ...]]]:
    budget.tick()
    if i == len(pattern):
        yield dict(binding)
        return
    v = pattern[i]
    if v in binding:
        seg = binding[v]
        if target[pos:pos + len(seg)] == seg:
            yield from _extend(pattern, target, rest, last, i + 1, pos + len(seg), binding, lo, budget)
        return
    room = len(target) - pos
    # v còn rest[i][v] lần xuất hiện, mỗi lần tốn cùng một độ dài
    longest = room // rest[i][v]
    for length in range(lo, longest + 1):
        seg = target[pos:pos + length]
        if length and rest[i][v] > 1 and last.get(seg, -1) < pos + length:
            # đoạn phải còn xuất hiện lại phía sau
            continue
        binding[v] = seg
        yield from _extend(pattern, target, rest, last, i + 1, pos + length, binding, lo, budget)
    binding.pop(v, None)


def match_placements(
    u: Word,
    w: Word,
    erasing: bool = True,
    budget: SearchBudget | int | None = None,
) -> list[Match]:
    """Mọi cặp (φ, vị trí) không lặp, theo thứ tự chuẩn (phép thế rồi vị trí)."""
    if len(u) == 0:
        raise BadArgumentError("Mẫu u phải khác rỗng")
    if not isinstance(budget, SearchBudget):
        budget = SearchBudget(budget)
    pattern, target = u.letters, w.letters
    rest = _remaining_counts(pattern)
    last = _last_starts(target)
    lo = 0 if erasing else 1
    found: set[Match] = set()
    for start in range(len(target) + 1):
        for binding in _extend(pattern, target, rest, last, 0, start, {}, lo, budget):
            phi = Substitution({v: Word(seg) for v, seg in binding.items()})
            found.add(Match(substitution=phi, start=start))
    logger.debug("match %s -> %s: %d vị trí, %d nút", u, w, len(found), budget.nodes)
    return sorted(found, key=Match.sort_key)


def match_pattern(
    u: Word,
    w: Word,
    erasing: bool = True,
    budget: SearchBudget | int | None = None,
) -> list[Substitution]:
    """Các phép thế khác nhau, theo thứ tự chuẩn."""
    seen: set[Substitution] = set()
    out: list[Substitution] = []
    for m in match_placements(u, w, erasing=erasing, budget=budget):
        if m.substitution not in seen:
            seen.add(m.substitution)
            out.append(m.substitution)
    return out
