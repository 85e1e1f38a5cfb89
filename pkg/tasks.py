# -*- coding: utf-8 -*-
"""
tasks.py
Bộ kiểm chứng: chạy lần lượt các mệnh đề (C1..C18) theo thứ tự cố định, vừa chạy vừa
yield thông báo tiến độ, cuối cùng là FINAL_MESSAGE kèm báo cáo JSON.
"""
from __future__ import annotations

import json
import logging
import random
import time
from dataclasses import asdict, dataclass, field
from itertools import combinations
from typing import Any, Callable, Dict, Iterator, List, Optional, Tuple

import config
from checkers.checker_rees import Matcher, check_rees
from checkers.checker_table import check_table
from checkers.matcher import match_placements
from checkers.structure_checks import check_no_div_instance, check_star_property, random_no_div_instance
from errors import BadArgumentError, BudgetExceededError, WorkbenchError
from identities import (
    FAILS,
    HOLDS,
    Identity,
    Substitution,
    basis,
    deletion_invariant,
    random_identity,
    separation_identity,
    witness_is_valid,
)
from monoid import PRESETS, FiniteMonoid, from_presentation, preset
from rees import ReesQuotient, order_formula, parse_word_set, quotient_map, rees_quotient
from words import (
    X,
    Letter,
    Word,
    WordSet,
    alphabet_profile,
    depth_map,
    format_word,
    generate_wn,
    is_square_free,
    length2_profile,
    max_depth,
    max_occurrences,
    min_nonlinear_simplefree_factor,
    wn_expected_depths,
    wn_simple_letters,
)

logger = logging.getLogger(__name__)

PASS = "PASS"
FAIL = "FAIL"
SKIPPED = "SKIPPED"
BUDGET = "BUDGET"
STATUSES = (PASS, FAIL, SKIPPED, BUDGET)

FINAL_PREFIX = "FINAL_MESSAGE:"

CROSS_CHECK_CORPUS = ("∅", "ab", "aabb", "abab", "abba", "wn:1", "wn:1,2")
EXPECTED_ORDERS = {"aabb": 10, "abab": 9, "abba": 10, "∅": 2}
EXPECTED_PRESET_ORDERS = {"M_SCRIPT": 6, "A21": 6, "B21": 6}
Y = Letter("y")


# ==============================================================================
# CẤU HÌNH & BÁO CÁO
# ==============================================================================

@dataclass(frozen=True)
class VerifyConfig:
    max_n: int = config.VERIFY_MAX_N
    seed: int = config.VERIFY_SEED
    table_budget: int = config.TABLE_BUDGET
    matcher_budget: int = config.MATCHER_BUDGET
    threads: int = config.THREADS
    no_div_cases: int = config.NO_DIV_CASES
    cross_check_count: int = config.CROSS_CHECK_COUNT
    structure_max_n: int = config.STRUCTURE_MAX_N
    enumerate_max_len: int = config.ENUMERATE_MAX_LEN
    enumerate_max_order: int = config.ENUMERATE_MAX_ORDER

    def __post_init__(self):
        if self.max_n < 1:
            raise BadArgumentError("max_n phải >= 1")
        if self.max_n > config.VERIFY_MAX_N_LIMIT:
            raise BadArgumentError(f"max_n phải <= {config.VERIFY_MAX_N_LIMIT} (VERIFY.MAX_N_LIMIT)")

    def to_json(self) -> dict:
        return {
            "max_n": self.max_n,
            "seed": self.seed,
            "budgets": {"table": self.table_budget, "matcher": self.matcher_budget},
        }


@dataclass
class ClaimResult:
    id: str
    title: str
    status: str
    witness: Optional[Any] = None
    millis: int = 0

    def to_json(self) -> dict:
        return asdict(self)


@dataclass
class Report:
    claims: List[ClaimResult]
    config: Dict[str, Any]
    summary: Dict[str, int] = field(default_factory=dict)

    def __post_init__(self):
        if not self.summary:
            self.summary = {s.lower(): sum(1 for c in self.claims if c.status == s) for s in STATUSES}

    @property
    def ok(self) -> bool:
        return self.summary.get("fail", 0) == 0 and self.summary.get("budget", 0) == 0

    def to_json(self) -> dict:
        return {
            "config": self.config,
            "claims": [c.to_json() for c in self.claims],
            "summary": self.summary,
        }

    def dumps(self, indent: int | None = config.JSON_INDENT) -> str:
        return json.dumps(self.to_json(), ensure_ascii=False, indent=indent)

    def without_timing(self) -> dict:
        data = self.to_json()
        for c in data["claims"]:
            c.pop("millis", None)
        return data


# ==============================================================================
# LIỆT KÊ M(w) NHỎ
# ==============================================================================

def _canonical_words(max_len: int) -> Iterator[str]:
    """Từ mà chữ cái xuất hiện lần đầu theo thứ tự a, b, c, ... (mỗi lớp đổi tên một đại diện)."""
    def grow(prefix: str, used: int) -> Iterator[str]:
        yield prefix
        if len(prefix) == max_len:
            return
        for c in range(min(used + 1, 26)):
            yield from grow(prefix + chr(ord("a") + c), max(used, c + 1))
    yield from grow("", 0)


def enumerate_small_rees(
    max_len: int | None = None,
    max_order: int | None = None,
) -> List[Tuple[Word, int]]:
    """(w, |M(w)|) cho mọi từ chuẩn có >= 2 chữ cái lặp và |M(w)| <= max_order, theo shortlex."""
    max_len = config.ENUMERATE_MAX_LEN if max_len is None else int(max_len)
    max_order = config.ENUMERATE_MAX_ORDER if max_order is None else int(max_order)
    found: list[tuple[Word, int]] = []
    for text in _canonical_words(max_len):
        repeated = [c for c in set(text) if text.count(c) >= 2]
        if len(repeated) < 2:
            continue
        w = Word.parse(text)
        order = order_formula(WordSet([w]))
        if order <= max_order:
            found.append((w, order))
    found.sort(key=lambda item: item[0].sort_key)
    return found


# ==============================================================================
# ĐỐI CHIẾU HAI BỘ KIỂM TRA
# ==============================================================================

@dataclass(frozen=True)
class CrossCheckResult:
    passed: bool
    checked: int
    discrepancy: Optional[Dict[str, Any]] = None


def cross_check_checkers(
    seed: int | None = None,
    count: int | None = None,
    *,
    matcher: Matcher | None = None,
    corpus: Optional[List[WordSet]] = None,
    identities: Optional[List[Identity]] = None,
    table_budget: int | None = None,
    matcher_budget: int | None = None,
    threads: int | None = None,
) -> CrossCheckResult:
    """
    Chạy check_table và check_rees trên cùng (W, đồng nhất thức): trạng thái phải trùng,
    nhân chứng nào cũng phải tính lại ra hai phần tử khác nhau.
    """
    seed = config.VERIFY_SEED if seed is None else seed
    count = config.CROSS_CHECK_COUNT if count is None else int(count)
    rng = random.Random(seed)
    cases = list(identities or []) + [random_identity(rng) for _ in range(count)]
    sets = corpus if corpus is not None else [parse_word_set(s) for s in CROSS_CHECK_CORPUS]
    quotients = [rees_quotient(W) for W in sets]

    checked = 0
    for identity in cases:
        for Q in quotients:
            by_table = check_table(Q, identity, budget=table_budget, threads=threads)
            by_rees = check_rees(Q, identity, budget=matcher_budget, matcher=matcher)
            checked += 1
            bad_witness = [
                o.method for o in (by_table, by_rees)
                if o.status == FAILS and not witness_is_valid(identity, o, Q)
            ]
            if by_table.status != by_rees.status or bad_witness:
                discrepancy = {
                    "word_set": str(Q.source),
                    "identity": str(identity),
                    "table": by_table.to_json(Q.monoid),
                    "rees": by_rees.to_json(Q.monoid),
                    "invalid_witness": bad_witness,
                }
                logger.warning("Hai bộ kiểm tra lệch nhau: %s", discrepancy)
                return CrossCheckResult(False, checked, discrepancy)
    return CrossCheckResult(True, checked)


# ==============================================================================
# CÁC MỆNH ĐỀ
# ==============================================================================

ClaimOutcome = Tuple[str, Optional[Any]]


class _Context:
    """Bộ nhớ đệm dùng chung giữa các mệnh đề trong một lần chạy."""

    def __init__(self, cfg: VerifyConfig):
        self.cfg = cfg
        self._rees: dict[WordSet, ReesQuotient] = {}
        self._presets: dict[str, FiniteMonoid] = {}
        self._rees_checks: dict[tuple[WordSet, Identity], Any] = {}

    def rees(self, W: WordSet) -> ReesQuotient:
        if W not in self._rees:
            self._rees[W] = rees_quotient(W)
        return self._rees[W]

    def preset(self, name: str) -> FiniteMonoid:
        if name not in self._presets:
            self._presets[name] = from_presentation(preset(name))
        return self._presets[name]

    def subsets(self) -> list[tuple[int, ...]]:
        ns = range(1, self.cfg.max_n + 1)
        return [combo for r in range(len(ns) + 1) for combo in combinations(ns, r)]

    def table(self, M, identity: Identity):
        return check_table(M, identity, budget=self.cfg.table_budget, threads=self.cfg.threads)

    def rees_check(self, W: WordSet, identity: Identity):
        # nhiều mệnh đề hỏi lại cùng cặp (W, đồng nhất thức)
        key = (W, identity)
        if key not in self._rees_checks:
            self._rees_checks[key] = check_rees(W, identity, budget=self.cfg.matcher_budget)
        return self._rees_checks[key]


def _identity_failure(identity: Identity, where: str, outcome, M: FiniteMonoid | None = None) -> dict:
    return {"identity": str(identity), "monoid": where, **outcome.to_json(M)}


def _claim_orders(ctx: _Context) -> ClaimOutcome:
    for text, expected in EXPECTED_ORDERS.items():
        W = parse_word_set(text)
        got = ctx.rees(W).order
        if got != expected or order_formula(W) != expected:
            return FAIL, {"word_set": text, "order": got, "formula": order_formula(W), "expected": expected}
    return PASS, None


def _claim_sigma_aabb(ctx: _Context) -> ClaimOutcome:
    W = parse_word_set("aabb")
    Q = ctx.rees(W)
    for identity in basis("SIGMA"):
        for outcome in (ctx.table(Q, identity), ctx.rees_check(W, identity)):
            if outcome.status != HOLDS:
                return FAIL, _identity_failure(identity, "M(aabb)", outcome, Q.monoid)
    return PASS, None


def _claim_lee_li(ctx: _Context) -> ClaimOutcome:
    W = parse_word_set("aabb")
    targets = [("M_SCRIPT", ctx.preset("M_SCRIPT")), ("M(aabb)", ctx.rees(W).monoid)]
    for identity in basis("LEE_LI"):
        for where, M in targets:
            outcome = ctx.table(M, identity)
            if outcome.status != HOLDS:
                return FAIL, _identity_failure(identity, where, outcome, M)
        outcome = ctx.rees_check(W, identity)
        if outcome.status != HOLDS:
            return FAIL, _identity_failure(identity, "M(aabb)", outcome)
    return PASS, None


def _claim_preset_orders(ctx: _Context) -> ClaimOutcome:
    for name, expected in EXPECTED_PRESET_ORDERS.items():
        got = ctx.preset(name).order
        if got != expected:
            return FAIL, {"preset": name, "order": got, "expected": expected}
    return PASS, None


def _structure_range(ctx: _Context) -> range:
    return range(1, max(ctx.cfg.structure_max_n, ctx.cfg.max_n + 1) + 1)


def _claim_depths(ctx: _Context) -> ClaimOutcome:
    for n in _structure_range(ctx):
        got = depth_map(generate_wn(n))
        expected = wn_expected_depths(n)
        if dict(got) != expected:
            diff = {str(a): [got.get(a), expected.get(a)] for a in set(got) | set(expected) if got.get(a) != expected.get(a)}
            return FAIL, {"n": n, "diff": diff}
    return PASS, None


def _claim_word_structure(ctx: _Context) -> ClaimOutcome:
    for n in _structure_range(ctx):
        wn = generate_wn(n)
        profile = length2_profile(wn)
        facts = {
            "square_free": is_square_free(wn),
            "at_most_two_occurrences": max_occurrences(wn) <= 2,
            "length2_unique": profile.all_unique,
            "length2_first_last": profile.all_first_last,
            "length": len(wn) == 2 * (n + 1) ** 2,
            "alphabet_size": len(wn.alf) == n * (n + 3) + 1,
            "simple_letters": alphabet_profile(wn).simple == wn_simple_letters(n),
            "min_simplefree_nonlinear": min_nonlinear_simplefree_factor(wn) == 2 * n + 2,
        }
        if not all(facts.values()):
            return FAIL, {"n": n, "facts": facts}
    return PASS, None


def _claim_separation_matrix(ctx: _Context) -> ClaimOutcome:
    ns = range(1, ctx.cfg.max_n + 1)
    for n in ns:
        identity = separation_identity(n)
        for k in ns:
            W = WordSet.of_wn([k])
            outcome = ctx.rees_check(W, identity)
            expected = HOLDS if n != k else FAILS
            if outcome.status != expected:
                return FAIL, {"n": n, "k": k, **outcome.to_json()}
            if outcome.status == FAILS:
                if outcome.witness != Substitution.identity_on(generate_wn(n).alf):
                    return FAIL, {"n": n, "k": k, "unexpected_witness": outcome.witness.to_json()}
                if not witness_is_valid(identity, outcome, ctx.rees(W)):
                    return FAIL, {"n": n, "k": k, "invalid_witness": outcome.witness.to_json()}
    return PASS, None


def _claim_sigma_truncations(ctx: _Context) -> ClaimOutcome:
    sigma = basis("SIGMA")
    for N in ctx.subsets():
        W = WordSet.of_wn(N)
        for identity in sigma:
            outcome = ctx.rees_check(W, identity)
            if outcome.status != HOLDS:
                return FAIL, _identity_failure(identity, f"M(W_{set(N) or '∅'})", outcome)
    return PASS, None


def _claim_distinct_varieties(ctx: _Context) -> ClaimOutcome:
    if ctx.cfg.max_n < 2:
        return SKIPPED, None
    ns = range(1, ctx.cfg.max_n + 1)
    signature: dict[tuple[int, ...], tuple[bool, ...]] = {}
    for N in ctx.subsets():
        W = WordSet.of_wn(N)
        signature[N] = tuple(ctx.rees_check(W, separation_identity(n)).holds for n in ns)
    for N1, N2 in combinations(ctx.subsets(), 2):
        if signature[N1] == signature[N2]:
            return FAIL, {"N1": list(N1), "N2": list(N2), "holds": list(signature[N1])}
    return PASS, None


def _claim_quotient_maps(ctx: _Context) -> ClaimOutcome:
    pairs = [(parse_word_set("aabb"), parse_word_set("∅"))]
    for N in ctx.subsets():
        for r in range(len(N) + 1):
            for sub in combinations(N, r):
                pairs.append((WordSet.of_wn(N), WordSet.of_wn(sub)))
    for W, W2 in pairs:
        try:
            quotient_map(ctx.rees(W), ctx.rees(W2))
        except WorkbenchError as e:
            return FAIL, {"source": str(W), "target": str(W2), **e.to_dict()}
    return PASS, None


def _claim_star_property(ctx: _Context) -> ClaimOutcome:
    ns = range(1, ctx.cfg.max_n + 1)
    for n, k in combinations(ns, 2):
        wn, wk = generate_wn(n), generate_wn(k)
        for m in match_placements(wn, wk, erasing=True, budget=ctx.cfg.matcher_budget):
            if not check_star_property(wn, wk, m.substitution, m.start):
                return FAIL, {"n": n, "k": k, "start": m.start, "substitution": m.substitution.to_json()}
    return PASS, None


def _claim_no_div(ctx: _Context) -> ClaimOutcome:
    rng = random.Random(ctx.cfg.seed)
    for i in range(ctx.cfg.no_div_cases):
        w, phi, a, b = random_no_div_instance(rng)
        if not check_no_div_instance(w, phi, a, b):
            return FAIL, {"case": i, "w": format_word(w), "phi": phi.to_json(), "a": format_word(a), "b": format_word(b)}
    return PASS, None


def _claim_cross_check(ctx: _Context) -> ClaimOutcome:
    result = cross_check_checkers(
        ctx.cfg.seed,
        ctx.cfg.cross_check_count,
        table_budget=ctx.cfg.table_budget,
        matcher_budget=ctx.cfg.matcher_budget,
        threads=ctx.cfg.threads,
    )
    return (PASS, None) if result.passed else (FAIL, result.discrepancy)


def _enumeration_as_dict(ctx: _Context, max_order: int) -> dict[str, int]:
    found = enumerate_small_rees(ctx.cfg.enumerate_max_len, max_order)
    return {format_word(w): order for w, order in found}


def _claim_enumeration(ctx: _Context) -> ClaimOutcome:
    got = _enumeration_as_dict(ctx, ctx.cfg.enumerate_max_order)
    expected = {"aabb": 10, "abab": 9, "abba": 10}
    return (PASS, None) if got == expected else (FAIL, {"found": got, "expected": expected})


def _claim_deletion_symmetry(ctx: _Context) -> ClaimOutcome:
    sigma = basis("SIGMA")
    for i, identity in enumerate(sigma):
        letters = [X] + ([Y] if i >= len(sigma) - 2 else [])
        for letter in letters:
            if not deletion_invariant(identity, letter):
                return FAIL, {"identity": str(identity), "letter": str(letter)}
    return PASS, None


def _claim_order_nine(ctx: _Context) -> ClaimOutcome:
    got = _enumeration_as_dict(ctx, 9)
    return (PASS, None) if got == {"abab": 9} else (FAIL, {"found": got, "expected": {"abab": 9}})


def _claim_depth_bound(ctx: _Context) -> ClaimOutcome:
    for k in _structure_range(ctx):
        deepest = max_depth(generate_wn(k))
        if deepest is None or deepest > k + 1:
            return FAIL, {"k": k, "max_depth": deepest}
    return PASS, None


def _claim_defining_relations(ctx: _Context) -> ClaimOutcome:
    for name in EXPECTED_PRESET_ORDERS:
        if not ctx.preset(name).satisfies_relations(PRESETS[name]):
            return FAIL, {"preset": name}
    return PASS, None


CLAIMS: List[Tuple[str, str, Callable[[_Context], ClaimOutcome]]] = [
    ("C1", "Orders of M(aabb), M(abab), M(abba), M(∅) are 10, 9, 10, 2", _claim_orders),
    ("C2", "Σ holds in M(aabb) under both checkers", _claim_sigma_aabb),
    ("C3", "Lee–Li identities hold in 𝓜 and in M(aabb)", _claim_lee_li),
    ("C4", "𝓜, A₂¹, B₂¹ have order 6", _claim_preset_orders),
    ("C5", "Depths in w_n: x ↦ n+1, y_i^k ↦ k, t_i ↦ 0, z_i ↦ 1", _claim_depths),
    ("C6", "w_n is square-free with unique first/last length-2 factors", _claim_word_structure),
    ("C7", "M(w_k) satisfies w_n ≈ x²(w_n)_x iff n ≠ k", _claim_separation_matrix),
    ("C8", "Σ holds in M(W_N) for every N ⊆ {1..max_n}", _claim_sigma_truncations),
    ("C9", "Distinct N give distinct varieties", _claim_distinct_varieties),
    ("C10", "M(W') is a quotient of M(W) for W' ⊆ W", _claim_quotient_maps),
    ("C11", "Matches of w_n into w_k send repeated letters to ε or to a repeated letter", _claim_star_property),
    ("C12", "Images of first occurrences carry no shallower first occurrence", _claim_no_div),
    ("C13", "Table and Rees checkers agree on random identities", _claim_cross_check),
    ("C14", "aabb, abab, abba are the only M(w) of order ≤ 10", _claim_enumeration),
    ("C15", "Σ sides coincide after deleting x (and y for the last two)", _claim_deletion_symmetry),
    ("C16", "abab is the only M(w) of order ≤ 9", _claim_order_nine),
    ("C17", "Every finite depth in w_k is at most k+1", _claim_depth_bound),
    ("C18", "𝓜, A₂¹, B₂¹ satisfy their defining relations", _claim_defining_relations),
]


def _run_one(ctx: _Context, claim_id: str, title: str, fn) -> ClaimResult:
    started = time.perf_counter()
    try:
        status, witness = fn(ctx)
    except BudgetExceededError as e:
        status, witness = BUDGET, e.to_dict()
    except Exception as e:
        logger.exception("Mệnh đề %s lỗi", claim_id)
        status, witness = FAIL, {"error": f"{type(e).__name__}: {e}"}
    if status == FAIL and witness is None:
        witness = {"error": "không có nhân chứng"}
    millis = int((time.perf_counter() - started) * 1000)
    return ClaimResult(id=claim_id, title=title, status=status, witness=witness, millis=millis)


def run_claims_iter(cfg: VerifyConfig | None = None, only: Optional[List[str]] = None):
    """
    Generator: yield từng dòng tiến độ, kết thúc bằng FINAL_MESSAGE:{json}; giá trị
    return (StopIteration.value) là Report.
    """
    cfg = cfg or VerifyConfig()
    ctx = _Context(cfg)
    registry = [c for c in CLAIMS if not only or c[0] in only]
    results: list[ClaimResult] = []
    yield f"Bắt đầu kiểm chứng: max_n={cfg.max_n}, seed={cfg.seed}, {len(registry)} mệnh đề"
    for idx, (claim_id, title, fn) in enumerate(registry, 1):
        yield f"➤ [{idx}/{len(registry)}] {claim_id}: {title}"
        result = _run_one(ctx, claim_id, title, fn)
        results.append(result)
        mark = {PASS: "✔", SKIPPED: "–", BUDGET: "⚠"}.get(result.status, "❌")
        yield f"     {mark} {claim_id} {result.status} ({result.millis} ms)"

    report = Report(claims=results, config=cfg.to_json())
    s = report.summary
    message = f"Hoàn tất! PASS {s['pass']}, FAIL {s['fail']}, SKIPPED {s['skipped']}, BUDGET {s['budget']}."
    status = "success" if report.ok else "failed"
    yield f"{FINAL_PREFIX}{json.dumps({'status': status, 'message': message, 'report': report.to_json()}, ensure_ascii=False)}"
    return report


def run_claims(cfg: VerifyConfig | None = None, only: Optional[List[str]] = None, on_event=None) -> Report:
    gen = run_claims_iter(cfg, only)
    while True:
        try:
            event = next(gen)
        except StopIteration as stop:
            return stop.value
        if on_event is not None:
            on_event(event)
