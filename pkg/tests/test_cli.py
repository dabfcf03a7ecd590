"""End-to-end tests for the command line, driven through ``main(argv)``."""

import io
import json
import shutil
import subprocess
import sys

import pytest

from gridcarve.cli import main


def _gen(tmp_path, name="g.txt", *, n=81, shape="full", seed=0):
    path = tmp_path / name
    rc = main(["gen", "--seed", str(seed), "--n", str(n), "--shape", shape,
               "--out", str(path)])
    assert rc == 0
    return path


class TestGen:
    def test_writes_header_and_vertices(self, tmp_path, capsys):
        path = _gen(tmp_path, n=1)
        text = path.read_text()
        assert text.startswith("# gridcarve gen seed=0 n=1 shape=full\n")
        assert "1 1\n" in text
        assert capsys.readouterr().out == ""

    def test_deterministic(self, tmp_path):
        a = _gen(tmp_path, "a.txt", n=200, shape="blob", seed=7)
        b = _gen(tmp_path, "b.txt", n=200, shape="blob", seed=7)
        assert a.read_bytes() == b.read_bytes()

    def test_stdout_default(self, capsys):
        assert main(["gen", "--n", "3", "--shape", "path"]) == 0
        out = capsys.readouterr().out
        assert "1 1" in out and "1 3" in out

    def test_n_zero_is_usage_error(self, capsys):
        assert main(["gen", "--n", "0"]) == 64
        assert "at least 1" in capsys.readouterr().err


class TestDecompose:
    def test_round_trip_with_verify(self, tmp_path, capsys):
        graph = _gen(tmp_path)
        cover = tmp_path / "cover.json"
        assert main(["decompose", str(graph), "--out", str(cover), "--verify"]) == 0
        assert main(["verify", "--graph", str(graph), "--cover", str(cover)]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc == {"ok": True, "violations": []}

    def test_single_vertex_document(self, tmp_path, capsys):
        graph = _gen(tmp_path, n=1)
        assert main(["decompose", str(graph)]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["n"] == 1
        assert doc["rectangles"] == [
            {"c1": 0, "c2": 2, "r1": 0, "r2": 2, "cells": [[1, 1]]}
        ]

    def test_reads_stdin(self, monkeypatch, capsys):
        monkeypatch.setattr(sys, "stdin", io.StringIO("1 1\n1 2\n"))
        assert main(["decompose", "-"]) == 0
        assert json.loads(capsys.readouterr().out)["n"] == 2

    def test_disconnected_input(self, tmp_path, capsys):
        graph = tmp_path / "g.txt"
        graph.write_text("1 1\n5 5\n")
        assert main(["decompose", str(graph)]) == 3
        assert "not connected" in capsys.readouterr().err

    def test_per_component_emits_array(self, tmp_path, capsys):
        graph = tmp_path / "g.txt"
        graph.write_text("1 1\n5 5\n5 6\n")
        assert main(["decompose", str(graph), "--per-component"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert isinstance(doc, list) and len(doc) == 2
        assert sorted(part["n"] for part in doc) == [1, 2]

    def test_parse_error(self, tmp_path, capsys):
        graph = tmp_path / "g.txt"
        graph.write_text("1 1\nbogus line\n")
        assert main(["decompose", str(graph)]) == 2
        assert "line 2" in capsys.readouterr().err

    def test_missing_file(self, tmp_path, capsys):
        assert main(["decompose", str(tmp_path / "absent.txt")]) == 2

    def test_svg_output(self, tmp_path):
        graph = _gen(tmp_path)
        svg = tmp_path / "cover.svg"
        assert main(["decompose", str(graph), "--out", str(tmp_path / "c.json"),
                     "--svg", str(svg)]) == 0
        body = svg.read_text()
        assert body.startswith("<svg") and "<rect" in body

    def test_svg_rejects_per_component(self, tmp_path, capsys):
        graph = _gen(tmp_path)
        rc = main(["decompose", str(graph), "--svg", str(tmp_path / "x.svg"),
                   "--per-component"])
        assert rc == 64

    def test_debug_asserts_enabled(self, tmp_path, monkeypatch, capsys):
        monkeypatch.setenv("GRIDCARVE_DEBUG_ASSERTS", "1")
        graph = _gen(tmp_path, n=173, shape="blob")
        assert main(["decompose", str(graph), "--out", str(tmp_path / "c.json")]) == 0


class TestPathdecomp:
    def test_verify_passes(self, tmp_path, capsys):
        graph = _gen(tmp_path)
        assert main(["pathdecomp", str(graph), "--verify"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["width"] >= 1
        assert len(doc["bags"]) >= 1

    def test_per_component(self, tmp_path, capsys):
        graph = tmp_path / "g.txt"
        graph.write_text("1 1\n5 5\n5 6\n")
        assert main(["pathdecomp", str(graph), "--per-component"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert isinstance(doc, list) and len(doc) == 2


class TestVerify:
    def test_requires_a_document(self, tmp_path, capsys):
        graph = _gen(tmp_path)
        assert main(["verify", "--graph", str(graph)]) == 64
        assert "nothing to verify" in capsys.readouterr().err

    def test_tampered_cover_fails(self, tmp_path, capsys):
        graph = _gen(tmp_path)
        cover = tmp_path / "cover.json"
        assert main(["decompose", str(graph), "--out", str(cover)]) == 0
        doc = json.loads(cover.read_text())
        doc["rectangles"][0]["cells"] = doc["rectangles"][0]["cells"][1:]
        cover.write_text(json.dumps(doc))
        out_path = tmp_path / "report.json"
        rc = main(["verify", "--graph", str(graph), "--cover", str(cover),
                   "--out", str(out_path)])
        assert rc == 4
        report = json.loads(out_path.read_text())
        assert report["ok"] is False
        assert report["violations"]

    def test_pathdecomp_document(self, tmp_path, capsys):
        graph = _gen(tmp_path)
        pd = tmp_path / "pd.json"
        assert main(["pathdecomp", str(graph), "--out", str(pd)]) == 0
        assert main(["verify", "--graph", str(graph), "--pathdecomp", str(pd)]) == 0
        assert json.loads(capsys.readouterr().out)["ok"] is True


class TestBench:
    def test_small_run(self, capsys):
        assert main(["bench", "--sizes", "1,2", "--repeats", "1"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[0] == "size,median_seconds"
        assert lines[1].startswith("1,") and lines[2].startswith("2,")

    def test_bad_sizes(self, capsys):
        assert main(["bench", "--sizes", "10,frog"]) == 64
        assert main(["bench", "--sizes", "0"]) == 64
        assert main(["bench", "--sizes", ","]) == 64

    def test_bad_repeats(self, capsys):
        assert main(["bench", "--sizes", "1", "--repeats", "0"]) == 64


class TestUsage:
    def test_unknown_flag(self, capsys):
        assert main(["decompose", "x.txt", "--frobnicate"]) == 64

    def test_unknown_command(self, capsys):
        assert main(["explode"]) == 64

    def test_bad_shape(self, capsys):
        assert main(["gen", "--n", "5", "--shape", "donut"]) == 64


@pytest.mark.skipif(shutil.which("gridcarve") is None,
                    reason="console script not on PATH")
def test_console_script(tmp_path):
    graph = tmp_path / "g.txt"
    proc = subprocess.run(
        ["gridcarve", "gen", "--n", "9", "--shape", "full", "--out", str(graph)],
        capture_output=True, text=True)
    assert proc.returncode == 0
    proc = subprocess.run(
        ["gridcarve", "decompose", str(graph), "--verify"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["n"] == 9
