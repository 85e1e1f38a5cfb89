# -*- coding: utf-8 -*-
"""
cli.py
Dòng lệnh cho bàn làm việc thương Rees.

Cách dùng:
  python cli.py rees aabb
  python cli.py depth "z_1.t_1.x.z_1.y_1^1.x.y_1^0.y_1^1"
  python cli.py wn 1
  python cli.py check --monoid rees:aabb --identity "x^3=x^4"
  python cli.py match xy ab
  python cli.py enumerate --max-len 8 --max-order 10
  python cli.py verify-paper --max-n 2 --out report.json

Mã thoát: 0 thành công / HOLDS / mọi mệnh đề PASS; 1 FAILS / có mệnh đề FAIL;
2 lỗi cú pháp hoặc tham số; 3 vượt ngân sách.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

import config
from checkers.checker_rees import check_rees
from checkers.checker_table import check_table
from checkers.matcher import match_placements
from errors import BadArgumentError, BudgetExceededError, WorkbenchError
from identities import FAILS, HOLDS, parse_identity
from rees import resolve_monoid_spec
from words import INFINITY, depth_map, format_word, generate_wn, parse_word

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILS = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _emit(args, text: str | None = None, data=None) -> None:
    if args.format == "json":
        print(json.dumps(data, ensure_ascii=False, indent=config.JSON_INDENT))
    else:
        print(text)


def _positive_int(value: str) -> int:
    try:
        n = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"không phải số nguyên: {value!r}")
    if n < 1:
        raise argparse.ArgumentTypeError(f"phải >= 1: {n}")
    return n


def _non_negative_int(value: str) -> int:
    try:
        n = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"không phải số nguyên: {value!r}")
    if n < 0:
        raise argparse.ArgumentTypeError(f"phải >= 0: {n}")
    return n


# ==============================================================================
# CÁC LỆNH
# ==============================================================================

def cmd_rees(args) -> int:
    Q_monoid, Q = resolve_monoid_spec(f"rees:{args.wordset}")
    if args.xlsx:
        from export_handler import export_cayley_table
        Path(args.xlsx).write_bytes(export_cayley_table(Q_monoid).getvalue())
        logger.info("Đã ghi bảng nhân ra %s", args.xlsx)
    data = {"word_set": str(Q.source), "order": Q.order, "monoid": Q_monoid.to_json()}
    text = f"|M({Q.source})| = {Q.order}\n{Q_monoid.to_dataframe().to_string()}"
    _emit(args, text, data)
    return EXIT_OK


def cmd_depth(args) -> int:
    w = parse_word(args.word)
    dm = depth_map(w)
    lines = [f"{a}: {'inf' if d == INFINITY else d}" for a, d in dm.items()]
    _emit(args, "\n".join(lines), {"word": format_word(w), "depth": dm.to_json()})
    return EXIT_OK


def cmd_wn(args) -> int:
    wn = generate_wn(args.n)
    _emit(args, format_word(wn), {"n": args.n, "word": format_word(wn), "length": len(wn)})
    return EXIT_OK


def cmd_check(args) -> int:
    M, Q = resolve_monoid_spec(args.monoid)
    identity = parse_identity(args.identity)
    method = args.method or ("both" if Q is not None else "table")
    if method in ("rees", "both") and Q is None:
        raise BadArgumentError("Phương pháp 'rees' chỉ dùng được với monoid rees:<tập từ>")

    outcomes = {}
    if method in ("table", "both"):
        outcomes["table"] = check_table(Q or M, identity, budget=args.budget, threads=args.threads)
    if method in ("rees", "both"):
        outcomes["rees"] = check_rees(Q, identity, budget=args.budget)

    statuses = {o.status for o in outcomes.values()}
    if len(statuses) > 1:
        logger.error("Hai bộ kiểm tra cho kết quả khác nhau: %s", {k: o.status for k, o in outcomes.items()})
    status = FAILS if FAILS in statuses else HOLDS
    lines = [status]
    for name, o in outcomes.items():
        if o.witness is not None:
            body = ", ".join(f"{k}->{v}" for k, v in o.witness.to_json(M).items())
            lines.append(f"{name}: witness {{{body}}}")
        logger.info("%s: %s, %d phép thế đã xét", name, o.status, o.evaluations)
    data = {
        "identity": str(identity),
        "monoid": args.monoid,
        "status": status,
        "results": {name: o.to_json(M) for name, o in outcomes.items()},
    }
    _emit(args, "\n".join(lines), data)
    return EXIT_OK if status == HOLDS else EXIT_FAILS


def cmd_match(args) -> int:
    u, w = parse_word(args.pattern), parse_word(args.target)
    matches = match_placements(u, w, erasing=not args.no_erasing, budget=args.budget)
    seen = list(dict.fromkeys(m.substitution for m in matches))
    lines = [str(phi) for phi in seen] + [f"{len(seen)} substitution(s)"]
    data = {
        "pattern": format_word(u),
        "target": format_word(w),
        "erasing": not args.no_erasing,
        "substitutions": [phi.to_json() for phi in seen],
        "placements": [{"substitution": m.substitution.to_json(), "start": m.start} for m in matches],
    }
    _emit(args, "\n".join(lines), data)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    from tasks import enumerate_small_rees
    found = enumerate_small_rees(args.max_len, args.max_order)
    lines = [f"{format_word(w)}\t{order}" for w, order in found]
    data = [{"word": format_word(w), "order": order} for w, order in found]
    _emit(args, "\n".join(lines) if lines else "∅", data)
    return EXIT_OK


def cmd_verify(args) -> int:
    from tasks import FINAL_PREFIX, VerifyConfig, run_claims
    cfg = VerifyConfig(
        max_n=args.max_n,
        seed=args.seed,
        table_budget=args.table_budget or config.TABLE_BUDGET,
        matcher_budget=args.matcher_budget or config.MATCHER_BUDGET,
        threads=args.threads or config.THREADS,
    )

    def log_event(line: str) -> None:
        if not line.startswith(FINAL_PREFIX):
            logger.info(line)

    report = run_claims(cfg, only=args.claims, on_event=log_event)
    text = report.dumps()
    if args.out:
        Path(args.out).write_text(text + "\n", encoding="utf-8")
        logger.info("Đã ghi báo cáo ra %s", args.out)
    if args.xlsx:
        from export_handler import export_report
        Path(args.xlsx).write_bytes(export_report(report).getvalue())
        logger.info("Đã ghi báo cáo Excel ra %s", args.xlsx)
    if args.format == "json" or not args.out:
        print(text)
    else:
        for c in report.claims:
            print(f"{c.id}\t{c.status}\t{c.title}")
    if report.summary.get("fail"):
        return EXIT_FAILS
    if report.summary.get("budget"):
        return EXIT_BUDGET
    return EXIT_OK


# ==============================================================================
# PHÂN TÍCH THAM SỐ
# ==============================================================================

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text", help="Định dạng đầu ra (mặc định text)")
    common.add_argument("--verbose", "-v", action="store_true", help="Ghi log mức DEBUG ra stderr")
    common.add_argument("--threads", type=_positive_int, default=None, help=f"Số luồng cho bộ kiểm tra bảng (mặc định {config.THREADS})")

    p = argparse.ArgumentParser(prog="cli.py", description="Bàn làm việc thương Rees M(W) và đồng nhất thức.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("rees", parents=[common], help="In cấp và bảng nhân của M(W)")
    s.add_argument("wordset", help="Danh sách từ cách nhau bởi dấu phẩy, hoặc wn:1,2")
    s.add_argument("--xlsx", help="Ghi bảng nhân ra file Excel")
    s.set_defaults(func=cmd_rees)

    s = sub.add_parser("depth", parents=[common], help="In độ sâu của từng chữ cái")
    s.add_argument("word")
    s.set_defaults(func=cmd_depth)

    s = sub.add_parser("wn", parents=[common], help="In w_n ở dạng chấm")
    s.add_argument("n", type=_positive_int)
    s.set_defaults(func=cmd_wn)

    s = sub.add_parser("check", parents=[common], help="Kiểm tra một đồng nhất thức trên một monoid")
    s.add_argument("--monoid", required=True, help="rees:<tập từ> hoặc preset:<M_SCRIPT|A21|B21|TRIVIAL>")
    s.add_argument("--identity", required=True, help='Ví dụ "x^3=x^4"')
    s.add_argument("--method", choices=("table", "rees", "both"), default=None,
                   help="Mặc định: both cho rees:, table cho preset:")
    s.add_argument("--budget", type=_positive_int, default=None,
                   help=f"Ngân sách (mặc định {config.TABLE_BUDGET} phép gán / {config.MATCHER_BUDGET} nút)")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("match", parents=[common], help="Liệt kê phép thế φ với φ(pattern) là thừa số của target")
    s.add_argument("pattern")
    s.add_argument("target")
    s.add_argument("--no-erasing", action="store_true", help="Không cho biến nhận từ rỗng")
    s.add_argument("--budget", type=_positive_int, default=None, help=f"Số nút tối đa (mặc định {config.MATCHER_BUDGET})")
    s.set_defaults(func=cmd_match)

    s = sub.add_parser("enumerate", parents=[common], help="Liệt kê M(w) nhỏ")
    s.add_argument("--max-len", type=_non_negative_int, default=config.ENUMERATE_MAX_LEN)
    s.add_argument("--max-order", type=_non_negative_int, default=config.ENUMERATE_MAX_ORDER)
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("verify-paper", parents=[common], help="Chạy toàn bộ bộ kiểm chứng và in báo cáo JSON")
    s.add_argument("--max-n", type=_positive_int, default=config.VERIFY_MAX_N)
    s.add_argument("--seed", type=int, default=config.VERIFY_SEED)
    s.add_argument("--out", help="Ghi báo cáo JSON ra file")
    s.add_argument("--xlsx", help="Ghi báo cáo Excel ra file")
    s.add_argument("--table-budget", type=_positive_int, default=None)
    s.add_argument("--matcher-budget", type=_positive_int, default=None)
    s.add_argument("--claims", nargs="+", default=None, help="Chỉ chạy các mệnh đề này, ví dụ C1 C7")
    s.set_defaults(func=cmd_verify)
    return p


def dispatch(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if isinstance(e.code, int) else EXIT_USAGE

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.INFO,
        format="%(asctime)s [%(levelname)s] %(name)s: %(message)s",
        stream=sys.stderr,
        force=True,
    )
    try:
        return args.func(args)
    except BudgetExceededError as e:
        print(f"Lỗi: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except (WorkbenchError, ValueError) as e:
        print(f"Lỗi: {e}", file=sys.stderr)
        return EXIT_USAGE


def main() -> int:
    return dispatch(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
