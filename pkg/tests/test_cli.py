from __future__ import annotations

import json
import subprocess
import sys
from pathlib import Path

import jsonschema
import pytest

from potlab.cli import bundled, main
from potlab.multigraph import Multigraph, canonical_form, cube
from potlab.pots import EdgeColoring, Pot, induced_pot
from potlab.reference import P1, P2
from potlab.realization import validate_witness
from potlab.verify import REPORT_SCHEMA

DATA = Path(bundled("cube.json")).parent


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_bundled_data_matches_library():
    assert Multigraph.from_json(json.loads((DATA / "cube.json").read_text())) == cube()
    assert Pot.from_json(json.loads((DATA / "p1.json").read_text())) == P1
    assert Pot.from_json(json.loads((DATA / "p2.json").read_text())) == P2
    assert json.loads((DATA / "report.schema.json").read_text()) == REPORT_SCHEMA


def test_realize_cube(capsys):
    code, out, _ = run(capsys, "realize", str(DATA / "cube.json"), str(DATA / "p1.json"))
    assert code == 0
    lam = EdgeColoring.from_json(json.loads(out))
    assert validate_witness(lam, P1) == []
    assert json.loads(out) == lam.to_json()


def test_realize_triangle(capsys, tmp_path):
    tri = tmp_path / "triangle.json"
    tri.write_text(json.dumps({"order": 3, "edges": [[0, 1], [1, 2], [0, 2]]}))
    code, out, _ = run(capsys, "realize", str(tri), "p1.json")
    assert code == 1 and out.strip() == "unrealizable"


@pytest.mark.parametrize("content", ['{"order": 3, "edges": [[0,', '{"edges": []}', '{"order": 2, "edges": [[0, 5]]}'])
def test_realize_bad_graph(capsys, tmp_path, content):
    bad = tmp_path / "bad.json"
    bad.write_text(content)
    code, _, err = run(capsys, "realize", str(bad), "p1")
    assert code == 2 and "error" in err


def test_bad_pot(capsys):
    code, _, err = run(capsys, "spectrum", "[[1, 0]]")
    assert code == 2
    code, _, _ = run(capsys, "spectrum", "/nonexistent/pot.json")
    assert code == 2


def test_disconnected_graph_is_input_error(capsys):
    code, _, _ = run(capsys, "realize", '{"order": 2, "edges": []}', "[[1, -1]]")
    assert code == 2


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["outputs", "p1"])
    assert exc.value.code == 2


def test_spectrum_golden(capsys):
    code, out, _ = run(capsys, "spectrum", "p1.json")
    assert code == 0
    data = json.loads(out)
    assert data["generators"] == [[1, 1, 1, 1, 2, 2]]
    assert data["min_order"] == 8
    assert data["matrix"]["tiles"] == P1.to_json()
    assert out == json.dumps(data, sort_keys=True, separators=(",", ":")) + "\n"


def test_pot_iso(capsys):
    code, out, _ = run(capsys, "pot-iso", "p1.json", "p2.json")
    assert code == 1 and out.strip() == "non-isomorphic"
    code, out, _ = run(capsys, "pot-iso", "p1", "p1")
    assert code == 0
    maps = json.loads(out)["isomorphisms"]
    assert {"1": 1, "2": 2, "3": 3, "4": 4, "5": 5} in maps


def test_catalog_list(capsys):
    code, out, _ = run(capsys, "catalog", "cubic8", "--list")
    assert code == 0
    records = json.loads(out)
    assert len(records) == 5
    assert len({tuple(r["canonical"]) for r in records}) == 5
    assert sum(r["bipartite"] for r in records) == 1
    for r in records:
        g = Multigraph.from_json(r["graph"])
        assert list(canonical_form(g).code) == r["canonical"]


def test_outputs_records(capsys):
    code, out, _ = run(capsys, "outputs", "[[1, -1]]", "--max-order", "4")
    assert code == 0
    records = [json.loads(line) for line in out.splitlines()]
    assert [r["order"] for r in records] == [1, 2, 3, 4]
    for r in records:
        lam = EdgeColoring.from_json(r["witness"])
        assert induced_pot(lam) == Pot([[1, -1]])
    code, out, _ = run(capsys, "outputs", "p1", "--max-order", "7")
    assert code == 1 and out == ""


def test_outputs_order_limit(capsys):
    code, _, err = run(capsys, "outputs", "[[1, -1]]", "--max-order", "13")
    assert code == 2 and "12" in err


def test_scenario(capsys):
    code, out, _ = run(capsys, "scenario", "cube", "[[1, 1, 1], [-1, -1, -1]]")
    data = json.loads(out)
    assert code == 0 and data["scenario"] == 1
    assert Multigraph.from_json(data["smaller_counterexample"]["graph"]).order == 2
    code, out, _ = run(capsys, "scenario", "cube", "[[1, -1]]")
    assert code == 1 and json.loads(out)["realized"] is False


def test_census(capsys):
    code, out, _ = run(capsys, "--pretty", "census", "cube", "--colors", "5")
    assert code == 0
    data = json.loads(out)
    pots = [Pot.from_json(c["pot"]) for c in data["classes"]]
    assert len(pots) == 2
    for c in data["classes"]:
        lam = EdgeColoring.from_json(c["witness"])
        assert induced_pot(lam) == Pot.from_json(c["pot"])


def test_minpot(capsys):
    code, out, _ = run(capsys, "minpot", "cube", "--scenario", "1", "--tiles", "2", "--colors", "1")
    data = json.loads(out)
    assert code == 0 and (data["T"], data["B"]) == (2, 1)


def test_global_flags_anywhere(capsys):
    _, a, _ = run(capsys, "--pretty", "spectrum", "p2")
    _, b, _ = run(capsys, "spectrum", "p2", "--pretty")
    assert a == b and "\n  " in a


def test_threads_do_not_change_output(capsys, monkeypatch):
    _, one, _ = run(capsys, "--threads", "1", "catalog", "cubic8", "--list")
    monkeypatch.setenv("POTLAB_THREADS", "4")
    _, four, _ = run(capsys, "catalog", "cubic8", "--list")
    assert one == four
    with pytest.raises(SystemExit):
        main(["--threads", "0", "catalog", "cubic8"])


def test_verify_json_schema(capsys):
    schema = json.loads((DATA / "report.schema.json").read_text())
    code, out, _ = run(capsys, "verify-paper", "--json", "--check", "pot-identity", "--check", "spectrum")
    report = json.loads(out)
    jsonschema.validate(report, schema)
    assert code == 0 and report["status"] == "pass"
    assert [c["id"] for c in report["checks"]] == ["pot-identity", "spectrum"]


def test_verify_detects_tampered_pot(capsys, tmp_path):
    tiles = json.loads((DATA / "p1.json").read_text())
    for t in tiles:
        if 5 in t or -5 in t:
            t.remove(5 if 5 in t else -5)
            break
    bad = tmp_path / "p1.json"
    bad.write_text(json.dumps(tiles))
    code, out, _ = run(capsys, "verify-paper", "--json", "--p1", str(bad), "--check", "pot-identity")
    report = json.loads(out)
    assert code != 0
    assert report["checks"][0]["id"] == "pot-identity" and not report["checks"][0]["passed"]


def test_verify_full_run(capsys):
    code, out, _ = run(capsys, "verify-paper", "--cases", "200")
    lines = out.splitlines()
    assert code == 0 and lines[-1] == "overall: PASS"
    assert len(lines) == 13 and all(line.startswith("[PASS]") for line in lines[:-1])


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "potlab.cli", "pot-iso", "p1", "p2"], capture_output=True, text=True
    )
    assert proc.returncode == 1 and proc.stdout.strip() == "non-isomorphic"
