"""CLI contract: output formats, exit codes, determinism."""

import json
import subprocess
import sys

import pytest

from qgenocchi.cli import main


@pytest.fixture
def run(capsys):
    def _run(*argv):
        status = main(list(argv))
        captured = capsys.readouterr()
        return status, captured.out.splitlines(), captured.err

    return _run


class TestTable:
    def test_text_symbolic(self, run):
        status, lines, _ = run("table", "--nmax", "4", "--format", "text")
        assert status == 0
        assert len(lines) == 5
        assert "G~_2 = (-2*q)/(1+q)" in lines

    def test_classical_values(self, run):
        status, lines, _ = run("table", "--nmax", "2", "--q", "1")
        assert status == 0
        assert lines == ["G~_0 = 0", "G~_1 = 1", "G~_2 = -1"]

    def test_single_line(self, run):
        status, lines, _ = run("table", "--nmax", "0")
        assert status == 0
        assert lines == ["G~_0 = 0"]

    def test_json(self, run):
        status, lines, _ = run("table", "--nmax", "3", "--format", "json")
        assert status == 0
        rows = [json.loads(line) for line in lines]
        assert rows[2] == {"n": 2, "value": "(-2*q)/(1+q)"}

    def test_csv(self, run):
        status, lines, _ = run("table", "--nmax", "2", "--format", "csv", "--q", "1")
        assert lines == ["n,value", "0,0", "1,1", "2,-1"]

    def test_polynomial_rows(self, run):
        status, lines, _ = run("table", "--nmax", "2", "--polynomials")
        assert status == 0
        assert lines[2].startswith("G~_2(x) = 2*x")

    def test_pole_is_exit_3(self, run):
        status, _, err = run("table", "--nmax", "4", "--q", "-1")
        assert status == 3
        assert "pole" in err

    def test_bad_nmax_is_exit_2(self, run):
        status, _, err = run("table", "--nmax", "-2")
        assert status == 2

    def test_rational_q(self, run):
        status, lines, _ = run("table", "--nmax", "2", "--q", "1/2")
        assert status == 0
        assert lines[2] == "G~_2 = -2/3"


class TestVerify:
    def test_only_reflection_emits_per_instance(self, run):
        status, lines, _ = run("verify", "--only", "THM4_EQ11", "--nmax", "25")
        assert status == 0
        assert len(lines) == 25
        assert all(json.loads(line)["verdict"] == "PASS" for line in lines)

    def test_only_thm6_with_probe(self, run):
        status, lines, _ = run("verify", "--only", "THM6_EQ16", "--nmax", "1")
        assert status == 0
        rows = [json.loads(line) for line in lines]
        assert rows[0]["params"] == {"n": 0} and rows[0]["verdict"] == "FAIL"
        assert "expected" in rows[0]["corrected_form"]
        assert rows[1]["verdict"] == "PASS"

    def test_prefix_ids_resolve(self, run):
        status, lines, _ = run("verify", "--only", "THM4", "--nmax", "25")
        assert status == 0 and len(lines) == 25
        status, lines, _ = run("verify", "--only", "THM6", "--nmax", "1")
        assert status == 0 and len(lines) == 2

    def test_unknown_id_exit_2(self, run):
        status, _, err = run("verify", "--only", "THM99")
        assert status == 2

    def test_ambiguous_id_exit_2(self, run):
        status, _, err = run("verify", "--only", "THM")
        assert status == 2
        assert "ambiguous" in err

    def test_csv_rejected(self):
        with pytest.raises(SystemExit) as exc:
            main(["verify", "--format", "csv"])
        assert exc.value.code == 2

    def test_default_run_small(self, run):
        status, lines, _ = run("verify", "--nmax", "6")
        assert status == 0
        rows = [json.loads(line) for line in lines]
        by_id = {}
        for row in rows:
            by_id.setdefault(row["id"], []).append(row)
        assert set(by_id) == {
            "EQ6", "EQ7", "THM1", "THM2_EQ10", "THM3_EQ13", "THM4_EQ11",
            "THM5_EQ12", "PROP_EQ14", "PROP_EQ15", "THM6_EQ16", "THM7", "THM8",
        }
        # ordering follows the id enumeration
        order = [row["id"] for row in rows]
        assert order == sorted(order, key=lambda i: list(by_id).index(i))
        assert all(r["verdict"] == "CORRECTED_PASS" for r in by_id["THM8"])
        assert any(r["corrected_form"] for r in by_id["THM7"])

    def test_text_format(self, run):
        status, lines, _ = run("verify", "--only", "THM1", "--nmax", "5", "--format", "text")
        assert status == 0
        assert all(line.endswith("PASS") for line in lines)


class TestPadicCommands:
    def test_converge_strict(self, run):
        status, lines, _ = run("padic-converge", "--n", "1", "--prime", "3",
                               "--q", "1+p", "--mmax", "5")
        assert status == 0
        rows = [json.loads(line) for line in lines]
        assert [r["error_valuation"] for r in rows] == [1, 2, 3, 4, 5]

    def test_converge_exact(self, run):
        status, lines, _ = run("padic-converge", "--n", "0", "--prime", "3", "--mmax", "3")
        assert status == 0
        assert all(json.loads(line)["error_valuation"] == "exact" for line in lines)

    def test_converge_violation_exit_4(self, run):
        status, lines, err = run("padic-converge", "--n", "3", "--prime", "3", "--mmax", "5")
        assert status == 4
        assert "level 2" in err
        # data is still emitted for inspection
        assert [json.loads(line)["error_valuation"] for line in lines] == [5, 4, 5, 6, 7]

    def test_converge_csv(self, run):
        status, lines, _ = run("padic-converge", "--n", "1", "--prime", "3",
                               "--mmax", "2", "--format", "csv")
        assert lines == ["level,error_valuation", "1,1", "2,2"]

    def test_bad_prime_exit_2(self, run):
        status, _, err = run("padic-converge", "--n", "1", "--prime", "4")
        assert status == 2

    def test_symbolic_q_rejected(self, run):
        status, _, err = run("padic-converge", "--n", "1", "--prime", "3", "--q", "symbolic")
        assert status == 2

    def test_q_outside_domain_exit_2(self, run):
        status, _, err = run("padic-converge", "--n", "1", "--prime", "3", "--q", "3")
        assert status == 2
        assert "|q-1|" in err

    def test_loggamma(self, run):
        status, lines, _ = run("loggamma", "--prime", "3", "--q", "1+p",
                               "--x", "1/p", "--precision", "12", "--mmax", "4")
        assert status == 0
        rows = [json.loads(line) for line in lines]
        assert rows[0]["kind"] == "series"
        assert [r["agreement_valuation"] for r in rows[1:]] == [2, 3, 4, 5]

    def test_loggamma_bad_x_exit_2(self, run):
        status, _, err = run("loggamma", "--prime", "3", "--x", "2")
        assert status == 2


class TestBernsteinCommand:
    def test_all_k(self, run):
        status, lines, _ = run("bernstein", "--n", "2")
        assert status == 0
        assert len(lines) == 3
        assert lines[2].startswith("B_2,2(x) = x^2")

    def test_single_k_json(self, run):
        status, lines, _ = run("bernstein", "--n", "2", "--k", "1", "--format", "json")
        row = json.loads(lines[0])
        assert row["polynomial"] == "-2*x^2 + 2*x"

    def test_bad_k(self, run):
        status, _, err = run("bernstein", "--n", "2", "--k", "5")
        assert status == 2


class TestPlumbing:
    def test_deterministic_output(self, run):
        _, first, _ = run("verify", "--only", "THM7", "--nmax", "3")
        _, second, _ = run("verify", "--only", "THM7", "--nmax", "3")
        assert first == second

    def test_out_file(self, run, tmp_path):
        path = tmp_path / "table.txt"
        status, lines, _ = run("table", "--nmax", "1", "--out", str(path))
        assert status == 0
        assert lines == []
        assert path.read_text(encoding="utf-8") == "G~_0 = 0\nG~_1 = 1\n"

    def test_console_entry_point(self):
        proc = subprocess.run(
            [sys.executable, "-m", "qgenocchi.cli", "table", "--nmax", "0"],
            capture_output=True, text=True,
        )
        assert proc.returncode == 0
        assert proc.stdout == "G~_0 = 0\n"

    def test_missing_subcommand_exit_2(self):
        with pytest.raises(SystemExit) as exc:
            main([])
        assert exc.value.code == 2
