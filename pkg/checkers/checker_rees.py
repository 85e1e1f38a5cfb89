# -*- coding: utf-8 -*-
"""
Kiểm tra đồng nhất thức trên M(W) không cần duyệt |M|^biến.

- Hai vế khác bảng chữ cái: sai ngay (gán 0 cho một chữ chỉ có ở một vế, ε cho phần còn lại).
- Ngược lại, phép thế làm sai phải đưa ít nhất một vế về một thừa số khác rỗng của W,
  nên chỉ cần duyệt các phép khớp của từng vế vào từng w ∈ W.
"""
from __future__ import annotations

import logging
from typing import Callable

from checkers.matcher import match_pattern
from identities import FAILS, HOLDS, ZERO_MARK, CheckOutcome, Identity, Substitution
from rees import ReesQuotient
from words import EMPTY_WORD, WordSet

logger = logging.getLogger(__name__)

Matcher = Callable[..., list[Substitution]]


def check_rees(
    W: WordSet | ReesQuotient,
    identity: Identity,
    budget: int | None = None,
    matcher: Matcher | None = None,
) -> CheckOutcome:
    source = W.source if isinstance(W, ReesQuotient) else W
    matcher = matcher or match_pattern
    lhs, rhs = identity.lhs, identity.rhs

    if lhs.alf != rhs.alf:
        one_sided = min(lhs.alf ^ rhs.alf)
        phi = Substitution({v: ZERO_MARK if v == one_sided else EMPTY_WORD for v in identity.variables})
        return CheckOutcome(FAILS, phi, 0, "rees")
    if lhs == rhs:
        return CheckOutcome(HOLDS, None, 0, "rees")

    mismatches: list[Substitution] = []
    examined = 0
    for side, other in ((lhs, rhs), (rhs, lhs)):
        if len(side) == 0:
            # alf bằng nhau nên vế kia cũng rỗng, đã xử lý ở trên
            continue
        for w in source:
            for phi in matcher(side, w, erasing=True, budget=budget):
                examined += 1
                if phi.apply(other) != phi.apply(side):
                    mismatches.append(phi)

    if mismatches:
        witness = min(mismatches, key=Substitution.sort_key)
        logger.debug("check_rees: %s sai trên %s tại %s", identity, source, witness)
        return CheckOutcome(FAILS, witness, examined, "rees")
    return CheckOutcome(HOLDS, None, examined, "rees")
