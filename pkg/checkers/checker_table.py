# -*- coding: utf-8 -*-
"""
Kiểm tra đồng nhất thức bằng duyệt toàn bộ bảng: mọi phép gán phần tử cho biến.

Thứ tự duyệt cố định (kiểu đồng hồ đo km): biến sắp theo thứ tự Letter, biến cuối
chạy nhanh nhất; phần tử theo thứ tự trong monoid. Nhân chứng trả về là phép gán
sai đầu tiên theo thứ tự này, không phụ thuộc số luồng.
"""
from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor

import numpy as np

import config
from errors import BudgetExceededError
from identities import FAILS, HOLDS, CheckOutcome, Identity, Substitution
from monoid import FiniteMonoid
from rees import ReesQuotient

logger = logging.getLogger(__name__)


def _side_values(table: np.ndarray, one: int, side_idx: list[int], digits: np.ndarray) -> np.ndarray:
    acc = np.full(digits.shape[1], one, dtype=np.int64)
    for j in side_idx:
        acc = table[acc, digits[j]]
    return acc


def _digits(start: int, stop: int, k: int, n: int) -> np.ndarray:
    rem = np.arange(start, stop, dtype=np.int64)
    digits = np.empty((k, stop - start), dtype=np.int64)
    for j in range(k - 1, -1, -1):
        digits[j] = rem % n
        rem //= n
    return digits


def check_table(
    M: FiniteMonoid | ReesQuotient,
    identity: Identity,
    budget: int | None = None,
    threads: int | None = None,
) -> CheckOutcome:
    monoid = M.monoid if isinstance(M, ReesQuotient) else M
    budget = int(budget if budget is not None else config.TABLE_BUDGET)
    threads = max(1, int(threads if threads is not None else config.THREADS))

    if identity.lhs == identity.rhs:
        return CheckOutcome(HOLDS, None, 0, "table")

    variables = identity.variables
    pos = {v: j for j, v in enumerate(variables)}
    lhs_idx = [pos[a] for a in identity.lhs]
    rhs_idx = [pos[a] for a in identity.rhs]
    n, k = monoid.order, len(variables)
    total = n ** k
    limit = min(total, budget)
    table = monoid.table
    chunk = config.TABLE_CHUNK_SIZE

    def scan(start: int) -> int | None:
        stop = min(start + chunk, limit)
        digits = _digits(start, stop, k, n)
        left = _side_values(table, monoid.one, lhs_idx, digits)
        right = _side_values(table, monoid.one, rhs_idx, digits)
        bad = np.flatnonzero(left != right)
        return start + int(bad[0]) if bad.size else None

    starts = list(range(0, limit, chunk))
    found: int | None = None
    if threads > 1 and len(starts) > 1:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            # từng đợt theo thứ tự; đợt đầu có lỗi cho nhân chứng nhỏ nhất
            for i in range(0, len(starts), threads):
                hits = [h for h in ex.map(scan, starts[i:i + threads]) if h is not None]
                if hits:
                    found = min(hits)
                    break
    else:
        for s in starts:
            found = scan(s)
            if found is not None:
                break

    if found is not None:
        digits = _digits(found, found + 1, k, n)[:, 0]
        phi = Substitution({v: int(digits[j]) for j, v in enumerate(variables)}).with_labels(monoid)
        logger.debug("check_table: %s sai tại %s", identity, phi)
        return CheckOutcome(FAILS, phi, found + 1, "table")
    if total > budget:
        raise BudgetExceededError(examined=limit, limit=budget, total=total)
    return CheckOutcome(HOLDS, None, total, "table")
