import json
from pathlib import Path

import pytest

from cornerminors.cli import dump_json, main

DATA = Path(__file__).resolve().parent.parent / "data"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--format", "json")
    return code, json.loads(out) if out.strip() else None, err


def test_analyze_hexagon_example(capsys):
    code, rep, _ = run_json(capsys, "analyze", "--input", DATA / "hexagon.json")
    assert code == 0
    assert len(rep["verticalIntervals"]) == 5 and len(rep["horizontalIntervals"]) == 4
    assert len(rep["extraToricGenerators"]) == 1


def test_analyze_empty_and_malformed(capsys, tmp_path):
    empty = tmp_path / "e.json"
    empty.write_text('{"m": 2, "n": 2, "minors": []}')
    code, rep, _ = run_json(capsys, "analyze", "--input", empty)
    assert code == 0 and rep["chordlessCycles"] == [] and rep["idealGenerators"] == []
    bad = tmp_path / "bad.json"
    bad.write_text('{"m": 2,')
    code, _, err = run(capsys, "analyze", "--input", bad)
    assert code == 2 and "ParseError" in err
    code, _, err = run(capsys, "analyze", "--input", tmp_path / "missing.json")
    assert code == 2


def test_primes(capsys):
    code, rep, _ = run_json(capsys, "primes", "--input", DATA / "corner3x3.json")
    assert code == 0
    comps = rep["components"]
    assert comps[0]["toric"] and comps[0]["W"] == []
    assert all("x11" in p["W"] for p in comps[1:])
    code, rep, _ = run_json(capsys, "primes", "--input", DATA / "single.json")
    assert [p["name"] for p in rep["components"]] == ["P_{}"]


def test_primes_with_identities(capsys):
    code, rep, _ = run_json(capsys, "primes", "--input", DATA / "corner3x3.json", "--max-degree", "3")
    assert code == 0 and all(r["pass"] for r in rep["identities"])


def test_radical(capsys):
    assert run_json(capsys, "radical", "--input", DATA / "corner2x4.json")[1]["radical"] is True
    rep = run_json(capsys, "radical", "--input", DATA / "corner3x3.json")[1]
    assert rep["radical"] is False and len(rep["cycle"]) == 4
    assert run_json(capsys, "radical", "--input", DATA / "single.json")[1]["radical"] is True
    code, _, err = run(capsys, "radical", "--input", DATA / "hexagon.json")
    assert code == 4 and "NotCornerCollection" in err


def test_hilbert(capsys):
    code, rep, _ = run_json(capsys, "hilbert", "--m", 2, "--n", 2)
    assert code == 0 and rep["equalWithStarTail"] is True
    assert run(capsys, "hilbert")[0] == 2


def test_betti(capsys):
    code, rep, _ = run_json(capsys, "betti", "--input", DATA / "corner3x3.json")
    assert code == 0 and rep["regularity"] == 3 and rep["untruncated"]
    code, _, err = run(capsys, "betti", "--input", DATA / "hexagon.json", "--cap-memory", 5)
    assert code == 3


def test_connect(capsys, tmp_path):
    code, rep, _ = run_json(capsys, "connect", "--input", DATA / "single.json",
                            "--tables", DATA / "single_tables.json")
    assert code == 0 and rep["verdict"] == "connected" and len(rep["witness"]) == 1
    assert rep["certificate"]["verdict"] == "certified"
    far = tmp_path / "t.json"
    far.write_text('{"u": {"cells": [[1,1,3],[2,2,3],[3,3,3]]}, "v": {"cells": [[1,2,3],[2,1,3],[3,3,3]]}}')
    code, rep, _ = run_json(capsys, "connect", "--input", DATA / "corner3x3.json", "--tables", far,
                            "--cap-bfs", 2)
    assert code == 3 and rep["verdict"] == "unknown"
    outside = tmp_path / "o.json"
    outside.write_text('{"u": {"cells": [[3,3,1]]}, "v": {"cells": [[3,3,1]]}}')
    assert run(capsys, "connect", "--input", DATA / "single.json", "--tables", outside)[0] == 2


def test_config_file(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text('{"memoryCap": 5, "outputFormat": "json"}')
    assert run(capsys, "betti", "--input", DATA / "hexagon.json", "--config", cfg)[0] == 3
    cfg.write_text('{"bfsCap": 0}')
    assert run(capsys, "radical", "--input", DATA / "single.json", "--config", cfg)[0] == 2
    cfg.write_text('{"outputFormat": "json"}')
    code, out, _ = run(capsys, "radical", "--input", DATA / "single.json", "--config", cfg)
    assert json.loads(out)["radical"] is True


@pytest.mark.parametrize("argv", [
    ["analyze", "--input", DATA / "hexagon.json"],
    ["primes", "--input", DATA / "hexagon.json"],
    ["radical", "--input", DATA / "corner3x3.json"],
    ["hilbert", "--m", 3, "--n", 2],
    ["betti", "--input", DATA / "corner2x4.json"],
    ["connect", "--input", DATA / "single.json", "--tables", DATA / "single_tables.json"],
])
def test_json_roundtrip(capsys, argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    assert code == 0
    assert dump_json(json.loads(out)) + "\n" == out


def test_verify_subset(capsys):
    code, out, _ = run(capsys, "verify", "--only", 1, 3, 10)
    assert code == 0
    assert out.count("[PASS]") == 3 and "3/3 criteria pass" in out
    code, rep, _ = run_json(capsys, "verify", "--only", 9)
    assert code == 1 and rep["passed"] == 0
