# -*- coding: utf-8 -*-
import json
import logging
from pathlib import Path

logger = logging.getLogger(__name__)

APP_CONFIG_FILE = Path(__file__).resolve().parent / "app_config.json"


# === TẢI CẤU HÌNH TỪ FILE JSON ===
def load_app_config(path: Path | str = APP_CONFIG_FILE) -> dict:
    """Đọc file app_config.json và trả về dict (rỗng nếu thiếu file hoặc sai định dạng)."""
    try:
        with open(path, "r", encoding="utf-8") as f:
            return json.load(f)
    except FileNotFoundError:
        logger.warning("Không tìm thấy file cấu hình '%s', dùng giá trị mặc định.", path)
        return {}
    except json.JSONDecodeError:
        logger.warning("File cấu hình '%s' có định dạng không hợp lệ, dùng giá trị mặc định.", path)
        return {}


# Tải dữ liệu một lần khi chương trình khởi động
_app_config = load_app_config()

_budgets = _app_config.get("BUDGETS", {})
_presentation = _app_config.get("PRESENTATION", {})
_verify = _app_config.get("VERIFY", {})
_enumerate = _app_config.get("ENUMERATE", {})
_web = _app_config.get("WEB", {})

# --- Ngân sách tìm kiếm ---
TABLE_BUDGET = int(_budgets.get("TABLE_EVALUATIONS", 100_000_000))
MATCHER_BUDGET = int(_budgets.get("MATCHER_NODES", 1_000_000))

# --- Dựng monoid từ biểu diễn ---
PRESENTATION_MAX_LEN = int(_presentation.get("MAX_LEN", 6))

# --- Bộ kiểm chứng ---
VERIFY_MAX_N = int(_verify.get("MAX_N", 2))
VERIFY_MAX_N_LIMIT = int(_verify.get("MAX_N_LIMIT", 4))
VERIFY_SEED = int(_verify.get("SEED", 42))
NO_DIV_CASES = int(_verify.get("NO_DIV_CASES", 1000))
CROSS_CHECK_COUNT = int(_verify.get("CROSS_CHECK_COUNT", 200))
STRUCTURE_MAX_N = int(_verify.get("STRUCTURE_MAX_N", 4))

ENUMERATE_MAX_LEN = int(_enumerate.get("MAX_LEN", 8))
ENUMERATE_MAX_ORDER = int(_enumerate.get("MAX_ORDER", 10))

THREADS = max(1, int(_app_config.get("THREADS", 1)))

WEB_HOST = _web.get("HOST", "127.0.0.1")
WEB_PORT = int(_web.get("PORT", 5000))


# === CẤU HÌNH CỐ ĐỊNH ===
# Số phép gán xử lý trong một lô numpy của bộ kiểm tra bảng
TABLE_CHUNK_SIZE = 1 << 18
JSON_INDENT = 2
