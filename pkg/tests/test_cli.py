import csv
import io
import json
import subprocess
import sys

import pytest

from sptk.cli import VERIFY_NAMES, main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def csv_rows(text):
    return list(csv.DictReader(io.StringIO(text)))


class TestTable:
    @pytest.mark.parametrize("method", ["comb", "moments", "series"])
    def test_spt_golden(self, method, golden_spt):
        code, text = run("table", "spt", "--kmax", "6", "--nmax", "29", "--method", method)
        assert code == 0
        rows = csv_rows(text)
        assert len(rows) == 174
        assert {(int(r["n"]), int(r["k"])): int(r["value"]) for r in rows} == golden_spt

    def test_spt_threads(self):
        _, a = run("table", "spt", "--kmax", "3", "--nmax", "12", "--method", "comb", "--threads", "2")
        _, b = run("table", "spt", "--kmax", "3", "--nmax", "12", "--method", "comb")
        assert a == b

    def test_csv_json_agree(self):
        for args in (
            ["table", "spt", "--kmax", "3", "--nmax", "10"],
            ["table", "stirling", "--nmax", "5"],
            ["table", "moments", "--kind", "eta", "--kmax", "2", "--nmax", "8"],
            ["table", "stats", "--kind", "rank", "--n", "6"],
        ):
            _, c = run(*args)
            _, j = run(*args, "--format", "json")
            assert [{k: int(v) for k, v in r.items()} for r in csv_rows(c)] == json.loads(j)

    def test_stirling(self):
        _, text = run("table", "stirling", "--nmax", "6")
        lines = text.strip().splitlines()
        assert lines[0] == "n,k,S"
        row6 = [int(r["S"]) for r in csv_rows(text) if r["n"] == "6"]
        assert row6 == [1, 341, 1408, 627, 55, 1]

    def test_moments(self):
        _, text = run("table", "moments", "--kind", "crank", "--kmax", "2", "--nmax", "4", "--format", "json")
        got = {(r["n"], r["k"]): r["value"] for r in json.loads(text)}
        assert got[(4, 1)] == 40 and got[(4, 2)] == 544

    def test_stats_convention(self):
        _, text = run("table", "stats", "--kind", "crank", "--n", "1")
        assert text == "m,count\n-1,1\n0,-1\n1,1\n"

    def test_deterministic(self):
        assert run("table", "spt", "--nmax", "15") == run("table", "spt", "--nmax", "15")


class TestVerify:
    @pytest.mark.parametrize("name", VERIFY_NAMES)
    def test_passes_small(self, name):
        code, text = run("verify", name, "--nmax", "20")
        assert code == 0, text
        assert text.startswith("PASS")
        body = json.loads(text.split("\n", 1)[1])
        assert body["passed"] is True

    def test_single_k(self):
        code, text = run("verify", "three-route", "--k", "2", "--nmax", "15")
        assert code == 0

    def test_failure_exit_code(self, monkeypatch):
        import sptk.congruences as cg

        bad = cg.CongruenceSpec("spt2mod5", 2, 13, 5, frozenset({0, 1, 4}))
        monkeypatch.setitem(cg.SPECS, "spt2mod5", bad)
        code, text = run("verify", "spt2mod5", "--nmax", "50")
        assert code == 1
        assert text.startswith("FAIL")


class TestUsage:
    @pytest.mark.parametrize(
        "argv",
        [
            [],
            ["verify", "nonsense"],
            ["table", "spt", "--nmax", "0"],
            ["table", "spt", "--method", "magic"],
            ["table", "stats"],
            ["frobnicate"],
        ],
    )
    def test_usage_errors(self, argv, capsys):
        assert main(argv, io.StringIO()) == 2

    def test_help_is_success(self, capsys):
        assert main(["--help"], io.StringIO()) == 0

    def test_console_script(self):
        proc = subprocess.run(
            [sys.executable, "-m", "sptk.cli", "table", "stats", "--n", "2"],
            capture_output=True, text=True, check=False,
        )
        assert proc.returncode == 0
        assert proc.stdout.splitlines()[0] == "m,count"
