import json

import pytest

from endograph.cli import main, parse_abelian, parse_group, UsageError
from endograph.groups import AbelianShape


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_selectors():
    assert parse_group("cyclic:6").order == 6
    assert parse_group("abelian:2^3x2").factors == (8, 2)
    assert parse_abelian("2^2x3") == AbelianShape.from_moduli([4, 3])
    assert parse_group("quaternion").name == "Q8"
    assert parse_group("dihedral:5").order == 10
    assert parse_group("catalog:Dic3").order == 12
    assert parse_group("catalog:15").name == "Z15"
    assert parse_group("catalog:8.4").name == "D4"
    for bad in ["cyclic:0", "cyclic:x", "abelian:", "abelian:2^x", "catalog:8", "catalog:8.9",
                "catalog:16", "nonsense", "quaternion:2", "cyclic:500"]:
        with pytest.raises(UsageError):
            parse_group(bad)


def test_build_auto_dot(capsys):
    code, out, _ = run(capsys, "build", "--group", "cyclic:6", "--kind", "auto", "--format", "dot")
    assert code == 0
    edges = [l.strip() for l in out.splitlines() if "--" in l]
    assert edges == ["1 -- 5;", "2 -- 4;"]


def test_build_json_and_single_vertex(capsys):
    code, out, _ = run(capsys, "build", "--group", "cyclic:6", "--kind", "endo", "--format", "json")
    assert code == 0 and len(json.loads(out)["arcs"]) == 13
    code, out, _ = run(capsys, "build", "--group", "cyclic:1", "--kind", "endo", "--format", "json")
    data = json.loads(out)
    assert data["vertices"] == 1 and data["arcs"] == []


def test_build_labels_and_out(tmp_path, capsys):
    path = tmp_path / "g.dot"
    code, out, _ = run(capsys, "build", "--group", "abelian:2x2", "--labels", "--out", str(path))
    assert code == 0 and out == ""
    assert '1 [label="(0,1)"];' in path.read_text()


def test_deterministic_output(capsys):
    a = run(capsys, "analyze", "--group", "catalog:Dic3", "--kind", "endo-directed", "--format", "json")
    b = run(capsys, "analyze", "--group", "catalog:Dic3", "--kind", "endo-directed", "--format", "json")
    assert a == b


@pytest.mark.parametrize("sel,kind,expect", [
    ("cyclic:5", "endo", {"planar": False, "girth": 3, "complete": True, "edges": 10}),
    ("cyclic:2", "endo", {"bipartite": True, "tree": True, "edges": 1}),
    ("quaternion", "endo-directed", {"single_point_basis": True}),
])
def test_analyze_examples(capsys, sel, kind, expect):
    code, out, _ = run(capsys, "analyze", "--group", sel, "--kind", kind, "--format", "json")
    data = json.loads(out)
    assert code == 0
    for k, v in expect.items():
        assert data[k] == v


def test_verify_only(tmp_path, capsys):
    report = tmp_path / "r.json"
    code, out, _ = run(capsys, "verify", "--only", "THM-2.6", "--max-n", "20", "--report", str(report))
    assert code == 0
    data = json.loads(report.read_text())
    assert [c["id"] for c in data["checks"]] == ["THM-2.6"] and data["verdict"] == "pass"
    assert "verdict: pass" in out


def test_hunt(capsys):
    code, out, _ = run(capsys, "hunt", "--max-order", "4")
    assert code == 0 and "Endo(Z4) ~ Endo(Z2xZ2)" in out
    code, _, err = run(capsys, "hunt", "--max-order", "16")
    assert code == 2 and len(err.strip().splitlines()) == 1


@pytest.mark.parametrize("argv", [
    ["build", "--group", "bogus:1"],
    ["build"],
    ["frobnicate"],
    ["verify", "--only", "NOPE"],
    ["list-groups", "--max-order", "20"],
    ["analyze", "--group", "symmetric:6"],
    ["build", "--group", "cyclic:4", "--max-enum-budget", "0"],
])
def test_usage_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert len(err.strip().splitlines()) == 1 and err.startswith("endograph:")


def test_budget_exit(capsys):
    code, _, err = run(capsys, "build", "--group", "symmetric:4", "--max-enum-budget", "10")
    assert code == 3 and "budget" in err


def test_list_and_table(capsys):
    code, out, _ = run(capsys, "list-groups", "--format", "json")
    assert code == 0 and len(json.loads(out)) == 28
    code, out, _ = run(capsys, "table", "--group", "cyclic:3")
    assert json.loads(out)["table"] == [[0, 1, 2], [1, 2, 0], [2, 0, 1]]
