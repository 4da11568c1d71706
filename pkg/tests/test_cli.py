import json

import pytest

from prismatoids.cli import main


def run(capsys, *argv):
    code = main(["--threads", "1", *argv])
    out = capsys.readouterr().out.strip().splitlines()
    return code, json.loads(out[-1]) if out else {}


def test_width_gallery_q40(capsys):
    code, rep = run(capsys, "width", "--gallery", "q40")
    assert code == 0
    assert rep["width"] == 6
    assert rep["prismatoid_excess"] == "1/35"


def test_gallery_roundtrip(tmp_path, capsys):
    out = tmp_path / "q20.v"
    code, rep = run(capsys, "gallery", "--name", "q20", "--out", str(out))
    assert code == 0 and rep["n"] == 25
    code, rep = run(capsys, "hull", "--in", str(out), "--validate",
                    "--out", str(tmp_path / "q20.h"),
                    "--adjacency", str(tmp_path / "q20.adj"))
    assert code == 0
    assert rep["facets"] == 244
    assert rep["validation"] == "PASS"
    assert (tmp_path / "q20.adj").read_text().count("\n") == 244


def test_width_from_file(tmp_path, capsys):
    out = tmp_path / "q28.v"
    run(capsys, "gallery", "--name", "q28", "--out", str(out))
    code, rep = run(capsys, "width", "--in", str(out))
    assert code == 0 and rep["width"] == 6


def test_oracle_cli(capsys):
    code, rep = run(capsys, "oracle", "--max-nodes", "8")
    assert code == 0
    assert rep["minimum_nodes"] == 8
    assert rep["splits_at_minimum"] == [[4, 4]]
    assert rep["classes"]["4+4"] == 2


def test_twisted_cli(capsys):
    code, rep = run(capsys, "twisted", "--d", "3", "--q", "2")
    assert code == 0 and rep["verified"] == "PASS" and rep["facets"] == 30


def test_twisted_two_copies_cli(capsys):
    code, rep = run(capsys, "twisted", "--d", "3", "--q", "2", "--two-copies")
    assert code == 0 and rep["width"] == 5


def test_pattern_cli(tmp_path, capsys):
    out = tmp_path / "pattern.txt"
    code, rep = run(capsys, "pattern", "--gallery-pair", "q40", "--out", str(out))
    assert code == 0
    assert rep["arrows"] == 16 and not rep["two_cycle"]
    assert out.read_text().count("->") == 16


def test_render_cli(tmp_path, capsys):
    vpath = tmp_path / "p.v"
    run(capsys, "gallery", "--name", "q28", "--out", str(tmp_path / "q28.v"))
    # render the 4-dimensional base pair instead: build via twisted
    code, rep = run(capsys, "twisted", "--d", "3", "--q", "2",
                    "--out", str(vpath))
    code, rep = run(capsys, "render", "--in", str(vpath),
                    "--out", str(tmp_path / "d.svg"), "--size", "1")
    assert code == 0
    assert (tmp_path / "d.svg").read_bytes().startswith(b"<?xml")


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["width"])  # missing required source
    assert exc.value.code == 2


def test_missing_file_is_usage_error(capsys):
    code = main(["width", "--in", "/nonexistent/file.v"])
    assert code == 2


def test_cache_roundtrip(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("PRISMATOID_CACHE", str(tmp_path / "cache"))
    out = tmp_path / "q28.v"
    run(capsys, "gallery", "--name", "q28", "--out", str(out))
    code, rep1 = run(capsys, "width", "--in", str(out))
    cached = list((tmp_path / "cache").glob("*.json"))
    assert cached, "facet cache should be written"
    code, rep2 = run(capsys, "width", "--in", str(out))
    assert rep2["width"] == rep1["width"] == 6
