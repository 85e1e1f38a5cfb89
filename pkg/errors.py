# -*- coding: utf-8 -*-
"""Các lỗi dùng chung. Mỗi lớp mang `code` ổn định để CLI/web trả về."""
from __future__ import annotations


class WorkbenchError(Exception):
    code = "ERROR"

    def to_dict(self) -> dict:
        return {"code": self.code, "message": str(self)}


class BadArgumentError(WorkbenchError, ValueError):
    code = "BAD_ARGUMENT"


# ---- Cú pháp từ / đồng nhất thức ----
class WordSyntaxError(WorkbenchError, ValueError):
    code = "SYNTAX_ERROR"

    def __init__(self, message: str, text: str = "", position: int = 0):
        super().__init__(f"{message} (vị trí {position}: {text!r})")
        self.text = text
        self.position = position

    def to_dict(self) -> dict:
        return {"code": self.code, "message": str(self), "position": self.position}


# ---- Bảng nhân ----
class MonoidError(WorkbenchError, ValueError):
    code = "BAD_TABLE"


class NonAssociativeError(MonoidError):
    code = "NON_ASSOCIATIVE"

    def __init__(self, triple: tuple[int, int, int]):
        s, t, u = triple
        super().__init__(f"Bảng không kết hợp: (s·t)·u ≠ s·(t·u) tại (s, t, u) = {triple}")
        self.triple = (int(s), int(t), int(u))


class BadIdentityError(MonoidError):
    code = "BAD_IDENTITY"


class BadZeroError(MonoidError):
    code = "BAD_ZERO"


class DuplicateLabelsError(MonoidError):
    code = "DUPLICATE_LABELS"


# ---- Biểu diễn ----
class PresentationError(WorkbenchError, ValueError):
    code = "BAD_PRESENTATION"


class EmptyGeneratorsError(PresentationError):
    code = "EMPTY_GENERATORS"


class UnknownPresetError(PresentationError):
    code = "UNKNOWN_PRESET"


class NotStabilizedError(PresentationError):
    code = "NOT_STABILIZED"

    def __init__(self, max_len: int, orders: tuple[int, int]):
        super().__init__(
            f"Bao đóng chưa ổn định: cấp {orders[0]} với max_len={max_len}, "
            f"cấp {orders[1]} với max_len={max_len + 1}"
        )
        self.max_len = max_len
        self.orders = orders


# ---- Thương Rees ----
class NotSubsetError(WorkbenchError, ValueError):
    code = "NOT_SUBSET"


class HomomorphismViolationError(WorkbenchError):
    code = "HOMOMORPHISM_VIOLATION"

    def __init__(self, pair: tuple[int, int]):
        super().__init__(f"Ánh xạ không bảo toàn phép nhân tại cặp {pair}")
        self.pair = (int(pair[0]), int(pair[1]))


# ---- Đồng nhất thức ----
class UnknownBasisError(WorkbenchError, ValueError):
    code = "UNKNOWN_BASIS"


class MissingVariableError(WorkbenchError, KeyError):
    code = "MISSING_VARIABLE"

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else ""


class ZeroWithoutZeroError(WorkbenchError, ValueError):
    code = "ZERO_WITHOUT_ZERO"


class InvalidMatchError(WorkbenchError, ValueError):
    code = "INVALID_MATCH"


class BudgetExceededError(WorkbenchError):
    code = "BUDGET_EXCEEDED"

    def __init__(self, examined: int, limit: int, total: int | None = None):
        what = f"/{total}" if total is not None else ""
        super().__init__(f"Vượt ngân sách: đã xét {examined}{what}, giới hạn {limit}")
        self.examined = examined
        self.limit = limit
        self.total = total

    def to_dict(self) -> dict:
        return {"code": self.code, "message": str(self), "examined": self.examined, "limit": self.limit}
