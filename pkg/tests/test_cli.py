import json
import subprocess
import sys

import pytest
from conftest import SCHEMAS, cli, schema_errors
from jsonschema import Draft202012Validator

COMMANDS = [
    (("hurwitz", "--degree", "3", "--branch-points", "4"), "hurwitz"),
    (("hurwitz", "--degree", "4", "--branch-points", "5", "--oracle-check"), "hurwitz"),
    (("hurwitz", "-d", "2", "-n", "4", "--normalized"), "hurwitz"),
    (("classify", "--field", "2^2", "--lambda", "t", "--j", "0"), "classify"),
    (("classify", "--field", "2", "--lambda", "0", "--j", "1"), "classify"),
    (("classify", "--field", "2^2", "--lambda", "0", "--j", "inf"), "classify"),
    (("classify", "--field", "2^3", "--lambda", "inf", "--j", "0"), "classify"),
    (("classify", "--field", "2^2", "--lambda", "1", "--j", "t+1"), "classify"),
    (("legendre", "--field", "2^2", "--lambda", "t", "--analyze"), "legendre"),
    (("legendre", "--field", "3^2", "--lambda", "t", "--analyze"), "legendre"),
    (("legendre", "--field", "Q", "--lambda=-3/4"), "legendre"),
    (("curve", "--field", "2^1", "--coeffs", "0,0,1,0,0", "--report"), "curve"),
    (("curve", "--field", "5", "--coeffs", "0,0,0,1,1", "--report"), "curve"),
    (("curve", "--field", "Q", "--coeffs", "0,-1,1,0,0"), "curve"),
]


def test_schemas_are_valid():
    for doc in SCHEMAS.values():
        Draft202012Validator.check_schema(doc)


@pytest.mark.parametrize("argv,schema", COMMANDS, ids=lambda x: " ".join(x) if isinstance(x, tuple) else x)
def test_output_validates(argv, schema):
    code, out, err = cli(*argv)
    assert code == 0, err
    doc = json.loads(out)
    assert doc["schema"] == "hf-1"
    assert schema_errors(doc, schema) == []
    again = cli(*argv)[1]
    assert again == out


def test_hurwitz_values():
    doc = json.loads(cli("hurwitz", "--degree", "3", "--branch-points", "4")[1])
    assert doc["raw"] == 24 and doc["normalized"] == "4" and doc["genus"] == 0
    doc = json.loads(cli("hurwitz", "--degree", "3", "--branch-points", "4", "--raw")[1])
    assert "normalized" not in doc


def test_classify_case1():
    doc = json.loads(cli("classify", "--field", "2^2", "--lambda", "t", "--j", "0")[1])
    assert doc["case"] == "Case1"
    assert doc["field"] == {"p": 2, "k": 2, "modulus": [1, 1, 1]}
    assert len(doc["map_type"]["source"]["vertices"]) == 2
    assert doc["attaching_point"] == ["t+1", "1"]


def test_not_on_fiber_exit_code():
    code, out, err = cli("classify", "--field", "2^2", "--lambda", "t", "--j", "1")
    assert code == 2 and out == ""
    assert "NotOnFiber" in err


@pytest.mark.parametrize("argv", [
    ("classify", "--field", "2^x", "--lambda", "t", "--j", "0"),
    ("classify", "--field", "4", "--lambda", "t", "--j", "0"),
    ("classify", "--field", "2^2", "--lambda", "t+", "--j", "0"),
    ("hurwitz", "--degree", "three", "--branch-points", "4"),
    ("curve", "--field", "2", "--coeffs", "0,0,1"),
    ("nonsense",),
    (),
])
def test_usage_errors(argv):
    code, out, err = cli(*argv)
    assert code == 1 and out == "" and err.startswith("error:")


@pytest.mark.parametrize("argv", [
    ("legendre", "--field", "2^2", "--lambda", "1"),
    ("curve", "--field", "2", "--coeffs", "0,0,0,0,0"),
    ("hurwitz", "--degree", "9", "--branch-points", "2"),
    ("classify", "--field", "3", "--lambda", "0", "--j", "0"),
])
def test_domain_errors(argv):
    code, out, err = cli(*argv)
    assert code == 2 and out == ""


def test_classify_dot(tmp_path):
    path = tmp_path / "case1.dot"
    code, out, _ = cli("classify", "--field", "2^2", "--lambda", "t", "--j", "0", "--dot", str(path))
    assert code == 0
    dot = path.read_text()
    assert dot.startswith('digraph "case1"')
    code, out2, _ = cli("classify", "--field", "2^2", "--lambda", "t", "--j", "0", "--format", "dot")
    assert out2 == dot


def test_graph_check_round_trip(tmp_path):
    for lam, j in (("t", "0"), ("0", "1"), ("0", "inf"), ("0", "0"), ("1", "0"), ("inf", "t")):
        code, out, _ = cli("classify", "--field", "2^2", "--lambda", lam, "--j", j)
        doc = json.loads(out)
        for payload in (out, json.dumps(doc["map_type"])):
            code, report, _ = cli("graph-check", stdin=payload)
            rep = json.loads(report)
            assert code == 0 and rep["valid"] and rep["kind"] == "map"
            assert schema_errors(rep, "graph_check") == []
        for side in ("source", "target"):
            f = tmp_path / f"{side}.json"
            f.write_text(json.dumps(doc["map_type"][side]))
            code, report, _ = cli("graph-check", str(f))
            rep = json.loads(report)
            assert code == 0 and rep["kind"] == "graph" and rep["violations"] == []
            assert schema_errors(doc["map_type"][side], "graph") == []


def test_graph_check_reports_violations():
    bad = {"vertices": [{"id": "A", "genus": 0}, {"id": "B", "genus": 0}], "edges": [],
           "legs": [{"label": "x", "vertex": "Z"}]}
    code, out, _ = cli("graph-check", stdin=json.dumps(bad))
    rep = json.loads(out)
    assert code == 2 and not rep["valid"]
    assert {v["kind"] for v in rep["violations"]} >= {"Disconnected", "DanglingReference"}
    assert cli("graph-check", stdin="{not json")[0] == 1


def test_console_script_deterministic():
    argv = [sys.executable, "-m", "stablecovers.cli", "classify", "--field", "2^3",
            "--lambda", "t^2", "--j", "0"]
    a = subprocess.run(argv, capture_output=True)
    b = subprocess.run(argv, capture_output=True)
    assert a.returncode == 0 and a.stdout == b.stdout and a.stdout
