import json

import pytest

from cgtkit.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out.strip()
    return code, out


def test_zsigmondy_json(capsys):
    code, out = run(capsys, "zsigmondy", "--q", "2", "--e", "6", "--json")
    assert code == 0
    assert json.loads(out) == {"q": 2, "e": 6, "phi_star": "1", "category": "one"}


def test_zsigmondy_scan_lines(capsys):
    code, out = run(capsys, "zsigmondy", "--scan", "3", "5")
    assert code == 0
    lines = [json.loads(l) for l in out.splitlines()]
    assert {"q": 2, "e": 4, "phi_star": "5", "category": "e_plus_1"} in lines


def test_na_m11(capsys):
    code, out = run(capsys, "na", "--group", "M11", "--class", "11a",
                    "--a", "1", "--json")
    assert code == 0 and json.loads(out)["count"] == 35


def test_cover(capsys):
    code, out = run(capsys, "cover", "--group", "A5", "--c1", "5a",
                    "--c2", "5b", "--json")
    assert code == 0 and json.loads(out)["covered"] is True


def test_triples_l27(capsys):
    code, out = run(capsys, "triples", "--group", "L2(7)", "--class", "7a",
                    "--a", "-2", "--classify", "--json")
    assert code == 0
    obj = json.loads(out)
    assert obj["total_pairs"] == 9 and obj["generating_pairs"] == 7


def test_lemma42(capsys):
    code, out = run(capsys, "lemma42", "--n", "11", "--json")
    assert code == 0 and json.loads(out)["order"] == 19958400


def test_lemma42_usage_error(capsys):
    code, out = run(capsys, "lemma42", "--n", "12")
    assert code == 2


def test_traceimage(capsys):
    code, out = run(capsys, "traceimage", "--q", "13", "--json")
    assert code == 0 and json.loads(out)["full"] is True


def test_spread(capsys):
    code, out = run(capsys, "spread", "--group", "A5", "--class", "5a", "--json")
    assert code == 0 and json.loads(out)["ok"] is True
    code, out = run(capsys, "spread", "--group", "A5", "--class", "2a", "--json")
    assert code == 1


def test_beauville_a5(capsys):
    code, out = run(capsys, "beauville", "--group", "A5", "--json")
    assert code == 0 and json.loads(out)["found"] is None


def test_neumann(capsys):
    code, out = run(capsys, "neumann", "--group", "A5", "--json")
    assert code == 0 and json.loads(out)["ok"] is True


def test_tensorpower(capsys):
    code, out = run(capsys, "tensorpower", "--base", "A5:5dim", "--m", "1",
                    "--json")
    assert code == 0
    assert json.loads(out)["min_ratio"] == "1/5"


def test_macbeath(capsys):
    code, out = run(capsys, "macbeath", "--q", "11", "--order", "5", "--json")
    assert code == 0
    obj = json.loads(out)
    assert obj["ok"] and all(c["covered"] for c in obj["classes"])


def test_searchtriple_seed_echo(capsys):
    code, out = run(capsys, "searchtriple", "--group", "A5", "--class", "5a",
                    "--a", "1", "--seed", "5", "--json")
    assert code == 0
    obj = json.loads(out)
    assert obj["seed"] == 5 and obj["witness"] is not None


def test_scott_cli(capsys):
    code, out = run(capsys, "scott", "--group", "A5", "--rep", "std4",
                    "--triple", "auto", "--json")
    assert code == 0
    obj = json.loads(out)
    assert obj["ok"] and obj["seed"] == 0


def test_verify_paper_suite(capsys):
    code, out = run(capsys, "verify-paper", "--suite", "tensor", "--json")
    assert code == 0
    obj = json.loads(out)
    assert obj["suite"] == "tensor" and obj["ok"]


def test_chartab_save(capsys, tmp_path):
    path = tmp_path / "a5.json"
    code, out = run(capsys, "chartab", "--group", "A5", "--save", str(path),
                    "--json")
    assert code == 0 and path.exists()
    obj = json.loads(path.read_text())
    assert obj["group"] == "A5" and obj["order"] == 60


def test_unknown_group_exit_code(capsys):
    code, _ = run(capsys, "na", "--group", "Nope", "--class", "1a", "--a", "1")
    assert code == 2
