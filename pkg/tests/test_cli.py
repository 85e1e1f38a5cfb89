# -*- coding: utf-8 -*-
import json

import pytest

import config
from cli import EXIT_BUDGET, EXIT_FAILS, EXIT_OK, EXIT_USAGE, dispatch
from words import generate_wn, parse_word


def run(capsys, *argv):
    code = dispatch(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_wn_prints_dotted_word(capsys):
    code, out = run(capsys, "wn", "1")
    assert code == EXIT_OK
    assert out.strip() == "z_1.t_1.x.z_1.y_1^1.x.y_1^0.y_1^1"


def test_wn_output_parses_back(capsys):
    _, out = run(capsys, "wn", "3")
    assert parse_word(out.strip()) == generate_wn(3)


def test_depth_json(capsys):
    code, out = run(capsys, "depth", "aba", "--format", "json")
    assert code == EXIT_OK
    assert json.loads(out) == {"word": "aba", "depth": {"a": 1, "b": 0}}


def test_rees_json(capsys):
    code, out = run(capsys, "rees", "aabb", "--format", "json")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["order"] == 10
    assert data["monoid"]["elements"][-1] == '"0"'


def test_rees_xlsx(capsys, tmp_path):
    target = tmp_path / "aabb.xlsx"
    code, _ = run(capsys, "rees", "aabb", "--xlsx", str(target))
    assert code == EXIT_OK
    assert target.stat().st_size > 0


def test_check_holds(capsys):
    code, out = run(capsys, "check", "--monoid", "rees:aabb", "--identity", "x^3=x^4")
    assert code == EXIT_OK
    assert out.splitlines()[0] == "HOLDS"


def test_check_fails_with_witness(capsys):
    code, out = run(capsys, "check", "--monoid", "rees:aabb", "--identity", "xy=yx")
    assert code == EXIT_FAILS
    lines = out.splitlines()
    assert lines[0] == "FAILS"
    assert "table: witness {x->a, y->b}" in lines
    assert "rees: witness {x->a, y->b}" in lines


def test_check_preset(capsys):
    code, out = run(capsys, "check", "--monoid", "preset:B21", "--identity", "x^3=x^4", "--format", "json")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["status"] == "HOLDS"
    assert list(data["results"]) == ["table"]


@pytest.mark.parametrize("argv", [
    ["check", "--monoid", "preset:A21", "--identity", "x=x", "--method", "rees"],
    ["check", "--monoid", "rees:aabb", "--identity", "xy"],
    ["check", "--monoid", "aabb", "--identity", "x=x"],
    ["depth", "aB"],
    ["frobnicate"],
    ["wn", "0"],
    ["verify-paper", "--max-n", str(config.VERIFY_MAX_N_LIMIT + 1), "--claims", "C1"],
])
def test_usage_errors(capsys, argv):
    code, _ = run(capsys, *argv)
    assert code == EXIT_USAGE


def test_check_budget(capsys):
    code, _ = run(capsys, "check", "--monoid", "rees:aabb", "--identity", "x^3=x^4", "--method", "table", "--budget", "5")
    assert code == EXIT_BUDGET


def test_match_counts(capsys):
    code, out = run(capsys, "match", "xy", "ab")
    assert code == EXIT_OK
    assert out.splitlines()[-1] == "8 substitution(s)"


def test_match_non_erasing_json(capsys):
    _, out = run(capsys, "match", "xx", "aabb", "--no-erasing", "--format", "json")
    assert json.loads(out)["substitutions"] == [{"x": "a"}, {"x": "b"}]


def test_enumerate(capsys):
    _, out = run(capsys, "enumerate")
    assert out.splitlines() == ["aabb\t10", "abab\t9", "abba\t10"]
    _, out = run(capsys, "enumerate", "--max-len", "3")
    assert out.strip() == "∅"


def test_verify_suite_subset(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, out = run(capsys, "verify-paper", "--max-n", "1", "--claims", "C1", "C4", "--out", str(target))
    assert code == EXIT_OK
    report = json.loads(target.read_text(encoding="utf-8"))
    assert [c["id"] for c in report["claims"]] == ["C1", "C4"]
    assert report["summary"]["pass"] == 2
    assert out.splitlines()[0].startswith("C1\tPASS")
