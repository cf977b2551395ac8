import csv
import io
import json
import subprocess
import sys

import pytest

from circalt.cli import BATCH_COLUMNS, SCHEMA_VERSION, main, parse_gen
from circalt.graph import cartesian_product, complete, cycle, path


def run(argv, stdin=None, monkeypatch=None):
    out = io.StringIO()
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv, out=out)
    return code, out.getvalue()


def test_parse_gen():
    assert parse_gen("cycle:5") == cycle(5)
    assert parse_gen("product:complete:2*path:3") == cartesian_product(complete(2), path(3))
    assert parse_gen("product:complete:2□path:3").n == 6
    for bad in ("cycle", "blob:3", "kab:2", "cycle:x", "product:cycle:4"):
        with pytest.raises(ValueError):
            parse_gen(bad)


def test_altitude_json():
    code, text = run(["altitude", "--gen", "cycle:5", "--format", "json"])
    assert code == 0
    data = json.loads(text)
    assert data["schema_version"] == SCHEMA_VERSION
    assert data["value"] == 2
    assert data["witness"][0] == 0 and sorted(data["witness"]) == list(range(5))
    assert data["certificate"] == {"upper": "pass", "lower": "pass"}
    assert data["graph6"] == "Dhc"


def test_altitude_is_deterministic_apart_from_timing():
    outputs = []
    for _ in range(2):
        _, text = run(["altitude", "--g6", "Dhc", "--format", "json"])
        data = json.loads(text)
        data.pop("seconds")
        outputs.append(data)
    assert outputs[0] == outputs[1]


def test_altitude_inputs(tmp_path):
    edges = tmp_path / "tri.txt"
    edges.write_text("n 3\n0 1\n1 2\n0 2\n")
    dimacs = tmp_path / "tri.col"
    dimacs.write_text("c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n")
    for flag, value in (("--edges", edges), ("--dimacs", dimacs), ("--g6", "Bw")):
        code, text = run(["altitude", flag, str(value), "--format", "json"])
        assert code == 0 and json.loads(text)["value"] == 3


def test_usage_errors():
    assert run(["altitude"])[0] == 2
    assert run(["altitude", "--g6", "@", "--gen", "cycle:4"])[0] == 2
    assert run(["altitude", "--g6", "!!"])[0] == 2
    assert run(["altitude", "--edges", "/no/such/file"])[0] == 2
    assert run(["verify", "nosuch"])[0] == 2
    assert run(["altitude", "--gen", "cycle:4", "--threads", "0"])[0] == 2


def test_budget_exit_code():
    code, text = run(["altitude", "--g6", "HBBcl~z", "--budget", "5", "--format", "json"])
    assert code == 3
    data = json.loads(text)
    assert data["status"] == "budget_exceeded"
    assert data["lower"] <= data["upper"]


def test_bounds():
    code, text = run(["bounds", "--gen", "cycle:5", "--format", "json"])
    assert code == 0
    data = json.loads(text)
    assert (data["omega"], data["girth"], data["chi_c"], data["alpha"]) == (2, "5", "5/2", 2)
    assert data["sandwich"] == "holds"
    code, text = run(["bounds", "--gen", "path:4", "--format", "json"])
    assert json.loads(text)["girth"] == "inf" and json.loads(text)["chi_c"] == "2/1"
    code, _ = run(["bounds", "--gen", "empty:3"])
    assert code == 4


def test_verify_formats():
    code, text = run(["verify", "bounds", "--max-n", "4", "--format", "json"])
    assert code == 0
    data = json.loads(text)
    assert data["reports"][0]["property_id"] == "bounds" and data["reports"][0]["passed"]
    code, text = run(["verify", "product", "--pairs", "small", "--format", "csv"])
    rows = list(csv.reader(io.StringIO(text)))
    assert code == 0 and rows[0][0] == "property" and rows[1][1] == "True"
    code, text = run(["verify", "blocks", "--max-n", "4", "--count", "5"])
    assert code == 0 and "PASS" in text


def test_batch_csv(monkeypatch, capsys):
    code, text = run(["batch"], stdin="@\nA_\n\nA?\n!!!\n", monkeypatch=monkeypatch)
    assert code == 1
    rows = list(csv.DictReader(io.StringIO(text)))
    assert list(rows[0].keys()) == BATCH_COLUMNS
    assert [(r["graph6"], r["alpha"]) for r in rows] == [("@", "1"), ("A_", "2"), ("A?", "1")]
    assert "line 5" in capsys.readouterr().err


def test_batch_empty_and_file(monkeypatch, tmp_path):
    assert run(["batch"], stdin="", monkeypatch=monkeypatch) == (0, "")
    f = tmp_path / "g.g6"
    f.write_text("Dhc\n")
    code, text = run(["batch", str(f), "--format", "json"])
    data = json.loads(text)
    assert code == 0 and data["columns"] == BATCH_COLUMNS and data["rows"][0]["alpha"] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "circalt", "altitude", "--gen", "complete:4", "--format", "csv"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    rows = list(csv.DictReader(io.StringIO(proc.stdout)))
    assert rows[0]["value"] == "4"
