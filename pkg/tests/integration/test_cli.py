"""
Integration tests for the typer CLI: output text, JSON output and exit codes
"""

import json

import pytest
from typer.testing import CliRunner

from linkhom_core import (
    EXIT_CONVENTION,
    EXIT_INVALID_INPUT,
    EXIT_MISMATCH,
    EXIT_NOT_FOUND,
    EXIT_OK,
    ORACLE_CAP_ENV,
)
from src.catalog import SAMPLE_CATALOG_PATH
from src.cli.main import app, run

runner = CliRunner()

ROW_ONE = ["--weights", "75,10,163,331,247", "--degree", "825"]


def invoke(*args, **kwargs):
    return runner.invoke(app, list(args), **kwargs)


class TestSingleLink:
    """homology / betti / torsion"""

    def test_homology(self):
        result = invoke("homology", *ROW_ONE)
        assert result.exit_code == EXIT_OK
        assert "b=10" in result.output
        assert "torsion (55,5,5,5,5)" in result.output
        assert "H_3 = Z^10 ⊕ Z/55 ⊕ (Z/5)^4" in result.output

    def test_homology_json(self):
        result = invoke("homology", *ROW_ONE, "--format", "json")
        assert result.exit_code == EXIT_OK
        payload = json.loads(result.output)
        assert payload["homology"] == {
            "betti": 10, "torsion": [55, 5, 5, 5, 5], "label": "Z^10 ⊕ Z/55 ⊕ (Z/5)^4",
        }

    def test_fano_degree(self):
        result = invoke("betti", "--weights", "10,75,163,247,331", "--fano")
        assert result.exit_code == EXIT_OK
        assert result.output.strip() == "b=10"

    def test_torsion(self):
        result = invoke("torsion", "--weights", "1,1,1", "--degree", "2")
        assert result.output.strip() == "torsion (2)"

    def test_torsion_none(self):
        result = invoke("torsion", "--weights", "15,10,6", "--degree", "30")
        assert result.output.strip() == "torsion none"

    def test_invalid_weights(self):
        result = invoke("homology", "--weights", "2,4,6", "--degree", "12")
        assert result.exit_code == EXIT_INVALID_INPUT

    def test_empty_weight_item(self):
        result = invoke("chain-check", "--weights", "75,,10,163,331,247", "--degree", "825", "--ordered")
        assert result.exit_code == EXIT_INVALID_INPUT

    def test_missing_degree(self):
        result = invoke("homology", "--weights", "1,1,1")
        assert result.exit_code == EXIT_INVALID_INPUT

    def test_degree_and_fano_conflict(self):
        result = invoke("homology", "--weights", "1,1,1", "--degree", "2", "--fano")
        assert result.exit_code == EXIT_INVALID_INPUT

    def test_convention_violation(self):
        result = invoke("betti", "--weights", "2,3", "--degree", "4")
        assert result.exit_code == EXIT_CONVENTION

    def test_unknown_format(self):
        result = invoke("homology", *ROW_ONE, "--format", "yaml")
        assert result.exit_code == EXIT_INVALID_INPUT

    def test_identical_invocations_identical_output(self):
        assert invoke("homology", *ROW_ONE).output == invoke("homology", *ROW_ONE).output


class TestRepresentability:
    """bp-check / chain-check"""

    def test_chain_check_search(self):
        result = invoke("chain-check", "--weights", "10,75,163,247,331", "--fano")
        assert result.exit_code == EXIT_OK
        assert "ordering (75,10,163,331,247) exponents (11,75,5,2,2)" in result.output

    def test_chain_check_ordered(self):
        result = invoke("chain-check", "--weights", "10,75,163,247,331", "--fano", "--ordered")
        assert result.exit_code == EXIT_NOT_FOUND

    def test_chain_check_json(self):
        result = invoke("chain-check", *ROW_ONE, "--ordered", "--format", "json")
        payload = json.loads(result.output)
        assert payload["chain"] == [{"order": [75, 10, 163, 331, 247], "exponents": [11, 75, 5, 2, 2]}]

    def test_bp_check_not_found(self):
        result = invoke("bp-check", "--weights", "10,75,163,247,331", "--fano")
        assert result.exit_code == EXIT_NOT_FOUND

    def test_bp_check_from_weights(self):
        result = invoke("bp-check", "--weights", "15,10,6", "--degree", "30")
        assert result.exit_code == EXIT_OK
        assert "exponents (2,3,5)" in result.output
        assert "milnor number 8" in result.output

    def test_bp_check_from_exponents(self):
        result = invoke("bp-check", "--bp", "2,3,5")
        assert result.exit_code == EXIT_OK
        assert "weights (15,10,6) d=30" in result.output

    def test_bp_and_weights_conflict(self):
        result = invoke("bp-check", "--bp", "2,3,5", "--weights", "15,10,6")
        assert result.exit_code == EXIT_INVALID_INPUT


class TestOracle:

    def test_poincare_sphere(self):
        result = invoke("oracle", "--bp", "2,3,5")
        assert result.exit_code == EXIT_OK
        assert "b=0" in result.output
        assert "torsion none" in result.output
        assert "MATCH" in result.output
        assert "MISMATCH" not in result.output

    def test_cap_option(self):
        result = invoke("oracle", "--bp", "3,3,3", "--cap", "4")
        assert result.exit_code == EXIT_INVALID_INPUT

    def test_cap_from_environment(self):
        result = invoke("oracle", "--bp", "3,3,3", env={ORACLE_CAP_ENV: "4"})
        assert result.exit_code == EXIT_INVALID_INPUT

    def test_too_few_variables(self):
        result = invoke("oracle", "--bp", "2,3")
        assert result.exit_code == EXIT_INVALID_INPUT


class TestCatalogCommands:
    """scan / table / sweep"""

    def test_scan_sample_json(self):
        result = invoke("scan", "--input", str(SAMPLE_CATALOG_PATH), "--format", "json")
        assert result.exit_code == EXIT_OK
        payload = json.loads(result.output)
        assert payload["summary"] == {"total": 10, "chain": 10, "homology": 10}

    def test_scan_stdin_csv(self):
        result = invoke("scan", "--input", "-", "--format", "csv", input="10,75,163,247,331,1\n")
        assert result.exit_code == EXIT_OK
        assert result.output.splitlines()[0].startswith("id,weights,degree")

    def test_scan_filters(self):
        result = invoke("scan", "--input", str(SAMPLE_CATALOG_PATH), "--format", "json",
                        "--forms", "bp", "--no-homology", "--min-w0", "10")
        payload = json.loads(result.output)
        assert payload["summary"] == {"total": 6, "skipped": 4}

    def test_scan_weights_per_row(self):
        result = invoke("scan", "--input", "-", "--format", "json", "--weights-per-row", "3",
                        input="1,1,1,1,3\n")
        payload = json.loads(result.output)
        assert payload["entries"][0]["bp"] == {"exponents": [3, 3, 3]}
        assert payload["entries"][0]["homology"]["betti"] == 2

    def test_scan_missing_file(self, tmp_path):
        result = invoke("scan", "--input", str(tmp_path / "absent.csv"))
        assert result.exit_code == EXIT_INVALID_INPUT

    def test_scan_empty_input(self):
        result = invoke("scan", "--input", "-", input="# nothing\n")
        assert result.exit_code == EXIT_INVALID_INPUT

    def test_table(self):
        result = invoke("table")
        assert result.exit_code == EXIT_OK
        assert result.output.count("MATCH") == 10
        assert "MISMATCH" not in result.output

    def test_sweep(self, tmp_path):
        output = tmp_path / "sweep.json"
        result = invoke("sweep", "--max-vars", "3", "--max-exponent", "4", "--output", str(output))
        assert result.exit_code == EXIT_OK
        assert "MISMATCH" not in result.output
        assert json.loads(output.read_text())["stats"]["mismatches"] == 0

    def test_verbose(self):
        result = invoke("--verbose", "table")
        assert result.exit_code == EXIT_OK


class TestRun:
    """run(argv) returns the exit code instead of exiting"""

    def test_success(self, capsys):
        assert run(["homology", *ROW_ONE]) == EXIT_OK
        assert "b=10" in capsys.readouterr().out

    def test_not_found(self, capsys):
        assert run(["bp-check", "--weights", "10,75,163,247,331", "--fano"]) == EXIT_NOT_FOUND

    def test_usage_error(self, capsys):
        assert run(["no-such-command"]) == EXIT_INVALID_INPUT

    def test_unknown_option(self, capsys):
        assert run(["homology", "--bogus"]) == EXIT_INVALID_INPUT
        assert "--bogus" in capsys.readouterr().err

    def test_missing_option_value(self, capsys):
        assert run(["homology", "--weights"]) == EXIT_INVALID_INPUT

    def test_cap_exceeded(self, capsys):
        assert run(["oracle", "--bp", "2,3,5", "--cap", "4"]) == EXIT_INVALID_INPUT

    def test_mismatch_code_is_distinct(self):
        assert EXIT_MISMATCH not in (EXIT_OK, EXIT_INVALID_INPUT, EXIT_NOT_FOUND, EXIT_CONVENTION)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
