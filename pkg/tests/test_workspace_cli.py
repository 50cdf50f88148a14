import json
import subprocess
import sys
from pathlib import Path

import pytest

from crossedext.errors import CheckFailure
from crossedext.cli import main, run
from crossedext.workspace import parse_workspace, serialize_workspace

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

MINIMAL = json.dumps({
    "field": "q",
    "algebras": {"a1": {"type": "lie", "dim": 1, "structure": []}},
    "commands": [{"op": "check"}],
})


def test_minimal_document_parses():
    ws = parse_workspace(MINIMAL)
    assert set(ws.algebras) == {"a1"}
    assert ws.algebras["a1"].dim == 1


def test_unresolved_reference():
    doc = json.loads(MINIMAL)
    doc["modules"] = {"m": {"algebra": "nope", "dim": 1, "action": {}}}
    with pytest.raises(CheckFailure) as exc:
        parse_workspace(json.dumps(doc))
    assert exc.value.code == "UNRESOLVED_REFERENCE"


def test_parse_error_carries_position():
    with pytest.raises(CheckFailure) as exc:
        parse_workspace("{ not json")
    assert exc.value.code == "PARSE_ERROR"
    assert exc.value.witness is not None


def test_validation_failure_names_object():
    doc = json.loads(MINIMAL)
    doc["algebras"]["bad"] = {
        "type": "lie", "dim": 2,
        "structure": [{"i": 0, "j": 1, "k": 0, "value": "1"},
                      {"i": 1, "j": 0, "k": 0, "value": "1"}]}
    with pytest.raises(CheckFailure) as exc:
        parse_workspace(json.dumps(doc))
    assert exc.value.code == "VALIDATION_FAIL"
    assert exc.value.witness == "bad"


def test_serialize_parse_idempotent_on_fixtures():
    for name in ("sl2.json", "yoneda_jordan.json"):
        text = (FIXTURES / name).read_text()
        once = serialize_workspace(parse_workspace(text))
        twice = serialize_workspace(parse_workspace(once))
        assert once == twice


def test_sl2_fixture_cohomology_table():
    ws = parse_workspace((FIXTURES / "sl2.json").read_text())
    records = run(ws, "cohomology")
    table = records[0]["table"]
    assert [row["dim_h"] for row in table] == [1, 0, 0, 1]


def test_yoneda_fixture_agrees_with_connecting():
    ws = parse_workspace((FIXTURES / "yoneda_jordan.json").read_text())
    recs = run(ws, "yoneda")
    assert recs[0]["status"] == "PASS"
    assert recs[0]["matches_connecting"] is True
    conn = run(ws, "connecting")[0]
    assert conn["class_canonical"] == recs[0]["class_canonical"]


def test_cli_exit_codes(tmp_path):
    good = tmp_path / "good.json"
    good.write_text(MINIMAL)
    assert main(["check", "--input", str(good)]) == 0
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    assert main(["check", "--input", str(bad)]) == 1
    assert main(["check", "--input", str(tmp_path / "absent.json")]) == 2


def test_cli_json_reports_byte_identical(tmp_path, capsys):
    path = str(FIXTURES / "sl2.json")
    main(["report", "--input", path, "--format", "json"])
    first = capsys.readouterr().out
    main(["report", "--input", path, "--format", "json"])
    second = capsys.readouterr().out
    assert first == second
    json.loads(first)  # well-formed


def test_cli_field_override(tmp_path, capsys):
    path = str(FIXTURES / "sl2.json")
    rc = main(["cohomology", "--input", path, "--field", "p:7",
               "--format", "json"])
    assert rc == 0
    out = json.loads(capsys.readouterr().out)
    assert [r["dim_h"] for r in out["results"][0]["table"]] == [1, 0, 0, 1]


def test_console_script_installed():
    proc = subprocess.run(
        [sys.executable, "-m", "crossedext.cli", "report", "--input",
         str(FIXTURES / "sl2.json")],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert "[PASS] cohomology" in proc.stdout
