from __future__ import annotations

import json

from polarspec.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def test_construct_json(capsys):
    code, out = run(capsys, "construct", "--m", "4", "--k", "8")
    data = json.loads(out.out)
    assert code == 0 and data["config"]["k"] == 8 and len(data["code"]["info"]) == 8


def test_minwt_and_union_bound(capsys, tmp_path):
    code, out = run(capsys, "minwt", "--m", "3", "--info", "5,6", "--pattern", "wl", "--i", "2")
    assert code == 0
    path = tmp_path / "s.json"
    path.write_text(out.out)
    assert json.loads(out.out)["result"] == {"d_min": 2, "count": "2"}
    code, out = run(capsys, "union-bound", "--spectrum", str(path), "--ebn0", "1,2", "--rate", "0.5")
    pts = json.loads(out.out)["points"]
    assert code == 0 and pts[0]["bound"] > pts[1]["bound"]


def test_avg_and_coset(capsys):
    code, out = run(capsys, "avg-spectrum", "--m", "3", "--info", "4,6,7,8", "--pattern", "qup", "--i", "1", "--cosets")
    data = json.loads(out.out)
    assert code == 0 and set(data["cosets"]) == {"4", "6", "7", "8"}
    code, out = run(capsys, "coset-spectrum", "--m", "3", "--prefix", "0010", "--indices", "1,2,5")
    spec = json.loads(out.out)["spectrum"]
    assert code == 0 and sum(int(v) for v in spec.values()) == 16


def test_dump_table_csv(capsys):
    code, out = run(capsys, "dump-table", "--monomial", "x2*x3", "--m", "5", "--a-max", "16", "--min-weight", "4")
    lines = out.out.strip().splitlines()
    assert code == 0 and lines[1].startswith("4,") and lines[-1].startswith("8,16,")


def test_csv_flag(capsys):
    code, out = run(capsys, "--csv", "minwt", "--m", "3", "--info", "4,6,7,8")
    assert out.out.splitlines()[0] == "weight,count"


def test_exit_codes(capsys):
    code, out = run(capsys, "minwt", "--m", "3", "--info", "5")
    assert code == 1 and "error" in out.err
    code, out = run(capsys, "coset-spectrum", "--m", "3", "--prefix", "0", "--indices", "9")
    assert code == 1


def test_check_small(capsys):
    code, out = run(capsys, "check", "--max-m", "2", "--patterns", "4", "--explicit", "4")
    assert code == 0 and json.loads(out.out)["ok"]


def test_global_flags_after_subcommand(capsys):
    code, out = run(capsys, "minwt", "--m", "3", "--info", "4,6,7,8", "--csv", "--seed", "3")
    assert code == 0 and out.out.splitlines() == ["weight,count", "4,14"]
