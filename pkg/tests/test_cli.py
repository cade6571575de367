import io
import json
import subprocess
import sys
from pathlib import Path

import jsonschema
import pytest

import snakechar.cli as cli
from snakechar.cli import run
from snakechar.reports import Report

DOCS = Path(__file__).resolve().parent.parent / "docs"


def schema(name):
    return json.loads((DOCS / name).read_text())


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_verify_branching_example():
    code, out, _ = call("verify", "branching", "--n", "2", "--snake", "1:4,1:8")
    assert code == 0
    report = json.loads(out)
    assert report["equal"] is True and report["theorem"] == "branching"
    jsonschema.validate(report, schema("report.schema.json"))


def test_paths_example():
    code, out, _ = call("paths", "--type", "A", "--m", "4", "--i", "1", "--k", "0")
    assert code == 0
    data = json.loads(out)
    assert data["count"] == 4 and len(data["paths"]) == 4
    jsonschema.validate(data, schema("paths.schema.json"))


def test_paths_type_b():
    code, out, _ = call("paths", "--type", "B", "--n", "2", "--i", "1", "--k", "0")
    assert code == 0
    data = json.loads(out)
    assert data["count"] == 5
    jsonschema.validate(data, schema("paths.schema.json"))


def test_verify_identity_example():
    code, out, _ = call("verify", "identity", "--n", "3", "--segments", "0-1,2-3", "--M", "1")
    assert code == 0
    jsonschema.validate(json.loads(out), schema("report.schema.json"))


VERIFY_CASES = [
    ["dominance", "--n", "2", "--snake", "1:4"],
    ["gap0", "--n", "2", "--snake", "1:4,2:10"],
    ["decomposition", "--n", "2", "--snake", "1:4,1:8"],
    ["tensor-square", "--n", "2", "--snake", "1:4"],
    ["determinant", "--n", "3", "--segments", "0-1,1-3"],
    ["ab", "--n", "5", "--x0", "0,4,8", "--xn", "1,3,5", "--M", "1"],
    ["gweight", "--n", "2", "--i", "1", "--k", "0"],
    ["gkr", "--n", "2", "--i", "1", "--T", "2", "--k", "0"],
    ["corners", "--n", "2", "--kmax", "4"],
]


@pytest.mark.parametrize("argv", VERIFY_CASES, ids=[c[0] for c in VERIFY_CASES])
def test_verify_reports_validate(argv):
    code, out, err = call("verify", *argv)
    assert code == 0, err
    report = json.loads(out)
    assert report["ok"] is True and report["theorem"] == argv[0]
    jsonschema.validate(report, schema("report.schema.json"))


def test_character_outputs_validate():
    char_schema = schema("character.schema.json")
    code, out, _ = call("char", "--type", "B", "--rank", "2", "--snake", "1:4")
    assert code == 0
    jsonschema.validate(json.loads(out), char_schema)
    code, out, _ = call("dual", "--n", "2", "--snake", "1:4")
    data = json.loads(out)
    jsonschema.validate(data["character"], char_schema)
    assert data["dual_monomial"] == [[1, 1, 2, 1]]


def test_other_verbs():
    code, out, _ = call("qchar", "--type", "A", "--rank", "3", "--snake", "1:0")
    assert code == 0 and len(json.loads(out)["terms"]) == 4
    code, out, _ = call("fold", "--n", "2", "--snake", "1:0")
    assert code == 0 and len(json.loads(out)["terms"]) == 4
    code, out, _ = call("gap", "--n", "2", "--snake", "1:4")
    assert code == 0 and json.loads(out)["by_gap"] == [[0, 4], [1, 1]]
    code, out, _ = call("branch", "--n", "2", "--snake", "1:4,1:8")
    assert code == 0 and [b["shifts"] for b in json.loads(out)["branches"]] == [[0, 0], [1, 0]]


def test_suite_output_validates():
    code, out, _ = call("verify", "suite", "--only", "1,8")
    assert code == 0
    data = json.loads(out)
    jsonschema.validate(data, schema("suite.schema.json"))
    assert [c["criterion"] for c in data["criteria"]] == [1, 8]


def test_csv_and_pretty_outputs():
    code, out, _ = call("char", "--type", "A", "--rank", "1", "--snake", "1:0", "--output", "csv")
    assert code == 0
    assert out.splitlines() == ["w1,mult", "-1,1", "1,1"]
    code, out, _ = call("verify", "dominance", "--n", "2", "--snake", "1:4", "--output", "pretty")
    assert code == 0 and "dominance" in out


def test_usage_errors_exit_1():
    assert call("frobnicate")[0] == 1
    assert call("paths", "--type", "A", "--m", "4")[0] == 1
    code, _, err = call("char", "--type", "B", "--rank", "2", "--snake", "1:5")
    assert code == 1 and "(1, 5)" in err
    code, _, err = call("char", "--type", "B", "--rank", "2", "--snake", "1;4")
    assert code == 1 and "malformed" in err
    assert call("verify", "suite", "--only", "42")[0] == 1


def test_resource_limit_exit_1(monkeypatch):
    code, _, err = call("char", "--type", "B", "--rank", "3", "--snake", "3:2,3:6",
                        "--max-tuples", "3")
    assert code == 1 and "limit" in err
    monkeypatch.setenv("SNAKECHAR_MAX_TUPLES", "3")
    assert call("char", "--type", "B", "--rank", "3", "--snake", "3:2,3:6")[0] == 1


def test_failed_check_exits_2(monkeypatch):
    def failing(*args, **kwargs):
        return Report("dominance", {}, ok=False, equal=False, lhs_mass=1, rhs_mass=0)

    monkeypatch.setattr(cli, "verify_dominance", failing)
    assert call("verify", "dominance", "--n", "2", "--snake", "1:4")[0] == 2


def test_deterministic_across_threads():
    argv = ["verify", "branching", "--n", "3", "--snake", "1:6,2:16"]
    outputs = {call(*argv, "--threads", t)[1] for t in ("1", "1", "4")}
    assert len(outputs) == 1


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "snakechar", "paths", "--type", "A", "--m", "2",
                           "--i", "1", "--k", "0", "--output", "csv"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[0].startswith("ys")
