import json
import subprocess
import sys

import pytest

from permcheck.cli import main, run_to_string


def run_json(*argv):
    code, out = run_to_string(list(argv))
    return code, json.loads(out)


class TestClassify:
    def test_a4(self):
        code, d = run_json("classify", "--group", "A4", "--format", "json")
        assert code == 0
        assert d["flags"]["sq4t"] is True and d["flags"]["supersolvable"] is False

    def test_c1(self):
        code, d = run_json("classify", "--group", "C1")
        assert code == 0 and all(d["flags"].values())

    def test_d12(self):
        code, d = run_json("classify", "--group", "D12")
        assert d["flags"]["pt"] is True and d["flags"]["sq4t"] is False

    def test_text_and_csv(self):
        code, out = run_to_string(["classify", "--group", "S3", "--format", "text"])
        assert code == 0 and out.startswith("S3: order 6, 6 subgroups")
        code, out = run_to_string(["classify", "--group", "S3", "--format", "csv"])
        lines = out.strip().splitlines()
        assert code == 0 and len(lines) == 2 and lines[1].startswith("S3,")

    def test_global_flag_before_subcommand(self):
        code, _ = run_to_string(["--format", "text", "classify", "--group", "S3"])
        assert code == 0

    def test_timings(self):
        _, d = run_json("classify", "--group", "S3", "--timings")
        assert "elapsed_ms" in d

    def test_file_group(self, tmp_path):
        f = tmp_path / "g.txt"
        f.write_text("degree 4\ngen (1 2 3 4)\ngen (2 4)\n")
        code, d = run_json("classify", "--group", f"file:{f}")
        assert code == 0 and d["order"] == 8 and d["flags"]["pt"] is False


class TestCheck:
    def test_d12(self):
        code, d = run_json("check", "--group", "D12", "--h", "(s)", "--k", "(s r)")
        assert code == 0
        assert d["perm4"] is False and d["product_order"] == 8 and d["join_order"] == 12

    def test_s3(self):
        code, d = run_json("check", "--group", "S3", "--h", "(1 2)", "--k", "(1 3)")
        assert d["perm4"] is True and d["permutes"] is False
        assert d["join_order"] == d["product_order"] == 6 and d["hk_order"] == 4

    def test_same(self):
        _, d = run_json("check", "--group", "A4", "--h", "(1 2)(3 4)", "--k", "(1 2)(3 4)")
        assert d["perm4"] is True

    def test_outside_group(self):
        code, _ = run_to_string(["check", "--group", "A4", "--h", "(1 2)", "--k", "()"])
        assert code == 1


class TestLattice:
    def test_json(self):
        code, d = run_json("lattice", "--group", "A4")
        assert code == 0 and len(d) == 10

    def test_dot(self):
        code, out = run_to_string(["lattice", "--group", "S3", "--format", "dot"])
        assert code == 0 and out.startswith("digraph")

    def test_bad_format(self):
        assert run_to_string(["lattice", "--group", "S3", "--format", "csv"])[0] == 1


class TestSurvey:
    def test_one(self):
        code, d = run_json("survey", "--max-order", "1")
        assert code == 0 and len(d["rows"]) == 1 and d["audit"]["violations"] == []

    def test_text(self):
        code, out = run_to_string(["survey", "--max-order", "6", "--format", "text"])
        assert code == 0 and "0 violations" in out

    def test_csv_header(self):
        code, out = run_to_string(["survey", "--max-order", "4", "--format", "csv"])
        assert out.splitlines()[0].startswith("group,order")

    def test_a5_row(self):
        # the row `survey --max-order 60` emits for A5, without the other 291 groups
        from permcheck.catalog import survey_corpus
        from permcheck.survey import survey_one
        spec = next(s for s in survey_corpus(60) if s.name == "A5")
        row, audit = survey_one(spec)
        assert row["flags"]["sq4t"] is False and row["flags"]["solvable"] is False
        assert audit.violations == []

    def test_per_row_cap(self):
        code, d = run_json("survey", "--max-order", "6", "--lattice-cap", "4")
        errs = [r for r in d["rows"] if "error" in r]
        assert code == 0 and errs and all(r["order"] > 4 for r in errs)


class TestExitCodes:
    def test_unknown_group(self):
        assert run_to_string(["classify", "--group", "Z5"])[0] == 1

    def test_missing_arg(self):
        with pytest.raises(SystemExit) as e:
            main(["classify"])
        assert e.value.code == 1

    def test_cap_flag(self):
        assert run_to_string(["classify", "--group", "S4", "--max-order-cap", "10"])[0] == 2

    def test_lattice_cap(self):
        assert run_to_string(["lattice", "--group", "A5", "--lattice-cap", "30"])[0] == 2

    def test_env_cap(self, monkeypatch):
        monkeypatch.setenv("PERMCHECK_CAP", "10")
        assert run_to_string(["classify", "--group", "S4"])[0] == 2

    def test_missing_file(self):
        assert run_to_string(["classify", "--group", "file:/nonexistent/g.txt"])[0] == 1


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "permcheck", "classify", "--group", "S3"],
                       capture_output=True, text=True)
    assert p.returncode == 0 and json.loads(p.stdout)["order"] == 6


def test_verify_paper():
    code, d = run_json("verify-paper", "--format", "json")
    checks = {c["id"]: c for c in d["checks"]}
    assert len(checks) == len(d["checks"])
    assert d["summary"]["passed"] == sum(c["pass"] for c in d["checks"]) == d["summary"]["total"]
    assert checks["e2-kmkm-size"]["actual"] == "8"
    assert checks["ex4-commutator-k1k2"]["actual"] == "P"
    assert checks["ex3-a5-permutables"]["actual"] == "[1, 60]"
    assert code == 0
