import csv
import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from boolprop.axioms import AXIOM_IDS
from boolprop.cli import main
from boolprop.engine import QUADRUPLES

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize(
    "argv, code",
    [
        (["decide", "B", "0", "1", "1", "0"], 0),
        (["decide", "B,0", "1", "0", "0", "1"], 1),
        (["decide", "B,or,neg,0,1", "1", "1", "0", "1"], 1),
        (["decide", "B,neg", "0", "1", "1", "0", "--explain"], 0),
    ],
)
def test_decide_exit_codes(capsys, argv, code):
    assert run(capsys, *argv)[0] == code


@pytest.mark.parametrize(
    "argv",
    [
        ["decide", "B,and", "0", "1", "1", "0"],
        ["decide", "neg,B", "0", "1", "1", "0"],
        ["decide", "B,0,0", "0", "1", "1", "0"],
        ["decide", "B", "0", "1", "2", "0"],
        ["decide", "B", "0", "1", "1"],
        ["solve", "B", "0", "1"],
        ["table"],
        ["decide", "--arity", "4", "B", "0", "1", "1", "0"],
        ["audit", "B,0", "--superstructure", "B,1"],
        ["frobnicate"],
        [],
    ],
)
def test_usage_errors_exit_two(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err


def test_decide_output(capsys):
    assert run(capsys, "decide", "B", "0", "1", "1", "0")[1] == "(𝔹) ⊨ 0:1::1:0\n"
    assert run(capsys, "decide", "B,0", "1", "0", "0", "1")[1] == "(𝔹,0) ⊭ 1:0::0:1\n"


def test_decide_json(capsys):
    code, out, _ = run(capsys, "decide", "--json", "B", "0", "0", "1", "0")
    doc = json.loads(out)
    assert code == 1
    assert doc["holds"] is False and doc["mode"] == "full" and doc["arity"] == 2
    assert doc["quadruple"] == [0, 0, 1, 0]
    assert doc["evidence"]["kind"] == "strict_inclusion"
    assert doc["evidence"]["upper"] == [0, 0, 1, 1]


@pytest.mark.parametrize(
    "structure, abc, expected",
    [("B,neg", "011", "{0}"), ("B", "010", "{0, 1}"), ("B,1", "001", "{1}"), ("B,0", "100", "{0}")],
)
def test_solve(capsys, structure, abc, expected):
    code, out, _ = run(capsys, "solve", structure, *abc)
    assert code == 0 and out == expected + "\n"


def test_solve_json(capsys):
    doc = json.loads(run(capsys, "solve", "--json", "B", "0", "1", "0")[1])
    assert doc == {"structure": "B", "equation": [0, 1, 0], "arity": 2, "solutions": [0, 1]}


def test_explain(capsys):
    code, out, _ = run(capsys, "explain", "--arity", "1", "B,neg", "0", "1", "1", "0")
    assert code == 0
    assert "¬z→z  [z/1 → z/0]" in out and "z→¬z" in out
    code, out, _ = run(capsys, "explain", "--arity", "1", "B", "0", "0", "1", "0")
    assert code == 0
    assert "Jus(0⇢0::1⇢0) ⊊ Jus(0⇢0::1⇢1)" in out
    assert "distinguishing: z→z" in out


def test_explain_json(capsys):
    doc = json.loads(run(capsys, "explain", "--json", "--arity", "1", "B,0,1", "1", "0", "1", "0")[1])
    assert doc["holds"] is True
    forward = doc["directions"][0]
    assert {m["rule"] for m in forward["members"]} >= {"1→0", "z→0", "1→z"}


@pytest.mark.parametrize(
    "golden, structures",
    [
        ("table_constants.md", ["B", "B,0", "B,1", "B,0,1"]),
        ("table_negation.md", ["B,neg", "B,neg,0", "B,neg,1", "B,neg,0,1"]),
        ("table_propositional.md", ["B,or,neg", "B,or,neg,0", "B,or,neg,1", "B,or,neg,0,1"]),
    ],
)
@pytest.mark.parametrize("arity", ["1", "2", "3"])
def test_tables_match_golden(capsys, golden, structures, arity):
    code, out, _ = run(capsys, "table", "--arity", arity, *structures)
    assert code == 0
    assert out == (GOLDEN / golden).read_text(encoding="utf-8")


@pytest.mark.parametrize("arity", ["1", "2", "3"])
def test_compare_matches_golden(capsys, arity):
    code, out, _ = run(capsys, "compare", "--arity", arity)
    assert code == 0
    assert out == (GOLDEN / "compare.md").read_text(encoding="utf-8")


def test_table_json_schema(capsys):
    doc = json.loads(run(capsys, "table", "--json", "B", "B,neg")[1])
    assert set(doc) == {"arity", "columns", "rows"}
    assert doc["columns"] == ["B", "B,neg"]
    assert len(doc["rows"]) == 16
    for row, q in zip(doc["rows"], QUADRUPLES):
        assert (row["a"], row["b"], row["c"], row["d"]) == q
        assert set(row["verdicts"]) == {"B", "B,neg"}
    assert doc["rows"][1]["verdicts"] == {"B": True, "B,neg": False}


def test_table_csv(capsys):
    out = run(capsys, "table", "--format", "csv", "B", "B,0")[1]
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["a", "b", "c", "d", "B", "B,0"]
    assert len(rows) == 17
    assert rows[10] == ["1", "0", "0", "1", "T", "F"]


def test_negation_columns_identical(capsys):
    doc = json.loads(run(capsys, "table", "--json", "B,neg", "B,neg,0", "B,or,neg")[1])
    for row in doc["rows"]:
        assert len(set(row["verdicts"].values())) == 1


def test_audit(capsys):
    code, out, _ = run(capsys, "audit", "B,or,neg,1")
    assert code == 0
    assert out.count(" | holds |  |") == 9
    out = run(capsys, "audit", "B")[1]
    assert "| central_permutation | fails |" in out


def test_audit_json_schema(capsys):
    doc = json.loads(run(capsys, "audit", "--json", "B")[1])
    assert set(doc) == {"structure", "arity", "axioms"}
    assert [e["axiom"] for e in doc["axioms"]] == list(AXIOM_IDS)
    for e in doc["axioms"]:
        assert set(e) == {"axiom", "holds", "counterexamples"}
        assert e["holds"] == (not e["counterexamples"])
    central = next(e for e in doc["axioms"] if e["axiom"] == "central_permutation")
    assert [0, 1, 0, 0] in central["counterexamples"]


def test_audit_superstructure(capsys):
    doc = json.loads(run(capsys, "audit", "--json", "B", "--superstructure", "B,0")[1])
    mono = doc["axioms"][-1]
    assert mono["axiom"] == "monotonicity" and not mono["holds"]
    assert [1, 0, 0, 1] in mono["counterexamples"]


def test_clone(capsys):
    code, out, _ = run(capsys, "clone", "--arity", "1", "B,neg,1")
    assert code == 0
    assert "| 10 | ¬z | ~z0 |" in out
    doc = json.loads(run(capsys, "clone", "--json", "B,or,neg")[1])
    assert len(doc["tables"]) == 16
    assert {"values": "0110", "term": doc["tables"][-1]["term"]} in doc["tables"]


def test_check_stability(capsys):
    code, _, err = run(capsys, "decide", "--check-stability", "--arity", "1", "B,or", "0", "1", "1", "0")
    assert code == 3
    assert "unstable" in err
    code, _, _ = run(capsys, "decide", "--check-stability", "B,or", "0", "1", "1", "0")
    assert code == 1
    code, _, _ = run(capsys, "table", "--check-stability", "B", "B,0")
    assert code == 0


@pytest.mark.parametrize(
    "argv",
    [
        ["table", "--json", "B", "B,or", "B,neg,0"],
        ["audit", "--json", "B,1"],
        ["explain", "B,or,neg,0,1", "0", "1", "1", "0"],
        ["clone", "--arity", "3", "B,or,1"],
        ["compare", "--format", "csv"],
    ],
)
def test_output_is_deterministic(capsys, argv):
    outputs = {run(capsys, *argv)[1] for _ in range(3)}
    assert len(outputs) == 1


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "boolprop", "solve", "B,neg", "0", "1", "1"],
        capture_output=True,
        text=True,
        encoding="utf-8",
    )
    assert proc.returncode == 0 and proc.stdout == "{0}\n"
