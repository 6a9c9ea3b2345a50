import json

import pytest

from nilalg import cli
from nilalg.formal import parse_sum


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_exact_json(capsys):
    code, out, _ = run(capsys, "exact", "--n", "2", "--d", "2", "--p", "0",
                       "--max-deg", "5")
    assert code == 0
    payload = json.loads(out)
    assert payload["degree"] == 3
    assert payload["witness"] == "x2.x1"
    assert all(set(row) == {"delta", "words", "rank", "qdim"}
               for row in payload["per_degree"])


def test_exact_deterministic(capsys):
    a = run(capsys, "exact", "--n", "3", "--d", "2", "--p", "2", "--max-deg", "7")
    b = run(capsys, "exact", "--n", "3", "--d", "2", "--p", "2", "--max-deg", "7")
    assert a == b


def test_member_json_roundtrip(capsys):
    code, out, _ = run(capsys, "member", "--n", "4", "--d", "2", "--p", "0",
                       "--expr", "x1^3.x2.x1^3", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["member"] is True
    assert payload["residual"] == "0"


def test_member_negative_residual_parses(capsys):
    code, out, _ = run(capsys, "member", "--n", "4", "--d", "2", "--p", "0",
                       "--expr", "x1^2.x2.x1^2 + x1.x2.x1^3", "--json")
    payload = json.loads(out)
    assert payload["member"] is False
    # residual is re-parseable and itself reduced
    f = parse_sum(payload["residual"], 2, 0)
    assert not f.is_zero()


def test_member_from_file(tmp_path, capsys):
    path = tmp_path / "expr.txt"
    path.write_text("x1^3.x2.x1^3")
    code, out, _ = run(capsys, "member", "--n", "4", "--d", "2",
                       "--file", str(path), "--json")
    assert code == 0
    assert json.loads(out)["member"] is True


def test_equiv_certificate(capsys):
    code, out, _ = run(capsys, "equiv", "--n", "4", "--d", "2", "--p", "0",
                       "--order", "succ",
                       "--expr", "x1.x2.x1^2 + x1^2.x2.x1", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["equiv_zero"] is True
    assert payload["certificate"] is not None


def test_reduce4(capsys):
    code, out, _ = run(capsys, "reduce4", "--d", "2", "--p", "0",
                       "--expr", "x1^2.x2.x1^2", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["canonical"] == "- x1^3.x2.x1 - x1.x2.x1^3".replace("- ", "-", 1)
    assert payload["difference_in_ideal"] is True


def test_witness4(capsys):
    code, out, _ = run(capsys, "witness4", "--d", "2", "--p", "0",
                       "--max-deg", "10", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["degree"] == 9


def test_bounds_text_and_json(capsys):
    code, out, _ = run(capsys, "bounds", "--n", "30", "--d", "2", "--p", "17",
                       "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["n"] == 30
    assert any(b["formula_id"] == "exp_half" for b in payload["all"])
    code2, out2, _ = run(capsys, "bounds", "--n", "4", "--d", "2", "--p", "0")
    assert code2 == 0
    assert "best upper: 10" in out2


def test_bounds_csv(capsys):
    code, out, _ = run(capsys, "bounds", "--n", "6", "--d", "2", "--p", "0",
                       "--csv")
    assert code == 0
    header, *rows = out.strip().splitlines()
    assert header.startswith("formula_id,")
    assert rows


def test_compare(capsys):
    code, out, _ = run(capsys, "compare", "--n", "2000", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["min_log10_ratio"] >= 20


def test_invariants_gen_check(capsys):
    code, out, _ = run(capsys, "invariants", "gen-check", "--n", "2", "--d", "1",
                       "--p", "0", "--extra-deg", "1")
    assert code == 0
    payload = json.loads(out)
    assert payload["summary"]["all_pass"] is True


def test_usage_errors(capsys):
    code, _, _ = run(capsys, "bounds", "--n", "0", "--d", "2")
    assert code == 2
    code, _, _ = run(capsys, "bounds", "--n", "3", "--d", "2", "--p", "4")
    assert code == 2
    code, _, _ = run(capsys, "member", "--n", "4", "--d", "2",
                     "--expr", "x1 +")
    assert code == 2
    code, _, _ = run(capsys, "member", "--n", "4", "--d", "2")
    assert code == 2
    code, _, _ = run(capsys, "nonsense")
    assert code == 2


def test_guard_exit_code(capsys):
    code, _, err = run(capsys, "exact", "--n", "3", "--d", "3", "--p", "0",
                       "--max-deg", "8", "--timeout-sec", "0")
    assert code == 1
    assert "guard" in err


def test_conjecture_flag(capsys):
    code, out, _ = run(capsys, "bounds", "--n", "10", "--d", "2", "--p", "11",
                       "--assume-conjecture-n2", "--json")
    assert code == 0
    payload = json.loads(out)
    assert any(b["formula_id"] == "conjecture_n2" for b in payload["all"])
