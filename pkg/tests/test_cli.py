"""Tests for the matroid command line: output, exit codes and files."""

import json

import pytest

from cli.app import EXIT_CAPACITY, EXIT_FALSE, EXIT_INPUT, EXIT_OK, main
from matroids.matroid_io import read_matroid, write_matroid
from tools.constructions import uniform, wheel, whirl


@pytest.fixture(autouse=True)
def _environment(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    monkeypatch.setenv("MATROID_CACHE_DIR", str(tmp_path / "cache"))
    for key in ("MATROID_WORKERS", "MATROID_LOG_LEVEL", "MATROID_NMAX", "MATROID_KMAX"):
        monkeypatch.delenv(key, raising=False)


@pytest.fixture
def w3_file(tmp_path):
    path = tmp_path / "w3.txt"
    write_matroid(wheel(3)[0], path)
    return str(path)


@pytest.fixture
def u25_file(tmp_path):
    path = tmp_path / "u25.txt"
    write_matroid(uniform(2, 5), path)
    return str(path)


def _lines(capsys):
    return [line for line in capsys.readouterr().out.splitlines() if line]


class TestCheck:

    def test_true(self, w3_file, capsys):
        assert main(["check", w3_file, "--k", "3", "--prop", "superminimal"]) == EXIT_OK
        assert _lines(capsys) == ["true"]

    def test_false(self, u25_file, capsys):
        assert main(["check", u25_file, "--k", "3", "--prop", "minimal"]) == EXIT_FALSE
        assert _lines(capsys) == ["false"]

    def test_brittle_needs_no_k(self, u25_file, capsys):
        assert main(["check", u25_file, "--prop", "brittle"]) == EXIT_FALSE

    def test_missing_k(self, w3_file):
        assert main(["check", w3_file, "--prop", "connected"]) == EXIT_INPUT

    def test_missing_file(self, tmp_path):
        assert main(["check", str(tmp_path / "none.txt"), "--k", "2", "--prop", "connected"]) == EXIT_INPUT

    def test_bad_arguments(self, w3_file):
        assert main(["check", w3_file, "--prop", "planar"]) == EXIT_INPUT
        assert main([]) == EXIT_INPUT


class TestProps:

    def test_wheel(self, w3_file, capsys):
        assert main(["props", w3_file]) == EXIT_OK
        data = json.loads(_lines(capsys)[0])
        assert (data["n"], data["r"]) == (6, 3)
        assert data["3c"] and data["sm3c"]
        assert data["triangles"] == 4


class TestConstruct:

    def test_to_file(self, tmp_path):
        path = tmp_path / "whirl.txt"
        assert main(["construct", "whirl", "3", "-o", str(path)]) == EXIT_OK
        assert read_matroid(path) == whirl(3)[0]

    def test_to_stdout(self, capsys):
        assert main(["construct", "uniform", "2", "4"]) == EXIT_OK
        assert _lines(capsys)[0] == "matroid U2,4"

    def test_bad_parameters(self):
        assert main(["construct", "uniform", "5", "4"]) == EXIT_INPUT
        assert main(["construct", "wheel", "3", "4"]) == EXIT_INPUT

    def test_capacity(self):
        assert main(["construct", "whirl", "13"]) == EXIT_CAPACITY


class TestCensus:

    def test_lines(self, capsys):
        assert main(["census", "--nmax", "3"]) == EXIT_OK
        records = [json.loads(line) for line in _lines(capsys)]
        assert len(records) == 15
        assert records[0]["n"] == 0

    def test_filter_to_file(self, tmp_path, capsys):
        out = tmp_path / "sm3c.ndjson"
        assert main(["census", "--nmax", "4", "--filter", "sm3c", "-o", str(out)]) == EXIT_OK
        assert _lines(capsys) == []
        records = [json.loads(line) for line in out.read_text(encoding="utf-8").splitlines()]
        assert [rec["cf"] for rec in records if rec["n"] == 4] == ["cf1:n4-r2-fc"]

    def test_witnesses(self, capsys):
        assert main(["census", "--nmax", "2", "--witnesses"]) == EXIT_OK
        records = [json.loads(line) for line in _lines(capsys)]
        assert all("sep" in rec for rec in records if not rec["3c"])

    def test_capacity(self):
        assert main(["census", "--nmax", "9"]) == EXIT_CAPACITY


class TestVerify:

    def test_single_suite(self, capsys):
        assert main(["verify", "--suite", "prop11", "--nmax", "3", "--kmax", "3"]) == EXIT_OK
        reports = [json.loads(line) for line in _lines(capsys)]
        assert [r["suite"] for r in reports] == ["prop11"]
        assert reports[0]["verdict"] == "pass"

    def test_unknown_suite(self):
        assert main(["verify", "--suite", "lemma99"]) == EXIT_INPUT

    def test_bad_environment(self, monkeypatch):
        monkeypatch.setenv("MATROID_NMAX", "eight")
        assert main(["verify", "--suite", "prop11"]) == EXIT_INPUT


class TestIso:

    def test_relabeled_wheel(self, tmp_path, w3_file, capsys):
        other = tmp_path / "shuffled.txt"
        write_matroid(wheel(3)[0].relabel([5, 3, 1, 0, 2, 4]), other)
        assert main(["iso", w3_file, str(other)]) == EXIT_OK
        assert _lines(capsys) == ["true"]

    def test_different(self, tmp_path, w3_file, capsys):
        other = tmp_path / "whirl.txt"
        write_matroid(whirl(3)[0], other)
        assert main(["iso", w3_file, str(other)]) == EXIT_FALSE
        assert _lines(capsys) == ["false"]
