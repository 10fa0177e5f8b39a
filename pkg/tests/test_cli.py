import csv
import io
import json
import subprocess
import sys

import pytest

from lsfcolloc.cli import (EXIT_CONFIG, EXIT_MISMATCH, EXIT_OK, ConfigError, RunConfig, main,
                           parse_grid_list, parse_text_report, read_config_file)


def run_cli(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_models_and_reference(capsys):
    code, out, _ = run_cli(capsys, "models")
    assert code == EXIT_OK and "witwit" in out and "sextic4d" in out
    code, out, _ = run_cli(capsys, "reference", "sextic4d")
    assert code == EXIT_OK and "Kaluza" in out
    code, _, err = run_cli(capsys, "reference", "nothing")
    assert code == EXIT_CONFIG and "error" in err


def test_text_report_roundtrip(capsys):
    code, out, _ = run_cli(capsys, "solve", "--model", "sextic3d", "--N", "6,10", "--k", "3")
    assert code == EXIT_OK
    assert "5³ × 5³" in out and "9³ × 9³" in out
    table = parse_text_report(out)
    assert table["9^3"][0] == pytest.approx(2.978379470, abs=1e-9)
    assert "# parameters" in out


def test_check_passes_and_fails(capsys):
    code, out, _ = run_cli(capsys, "solve", "--model", "harmonic4d", "--N", "6", "--k", "2",
                           "--check", "--tol", "1e-8")
    assert code == EXIT_OK and "|diff|" in out
    code, _, _ = run_cli(capsys, "solve", "--model", "harmonic4d", "--N", "6", "--k", "2",
                         "--check", "--tol", "1e-14")
    assert code == EXIT_MISMATCH


def test_check_without_reference_warns(capsys):
    code, out, err = run_cli(capsys, "solve", "--model", "pe", "--N", "8", "--check")
    assert code == EXIT_OK and "warning" in err and "(none)" in out


def test_csv_and_json(capsys):
    code, out, _ = run_cli(capsys, "solve", "--model", "pe", "--N", "20", "--k", "2",
                           "--format", "csv", "--check")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == EXIT_OK
    assert [r["grid"] for r in rows] == ["19^2", "19^2"]
    assert float(rows[0]["energy"]) == pytest.approx(1.169791833, abs=1e-8)
    assert rows[0]["abs_error"]
    code, out, _ = run_cli(capsys, "solve", "--model", "pe", "--N", "20", "--k", "2",
                           "--format", "json")
    doc = json.loads(out)
    assert doc["results"][0]["grid"] == "19^2"
    assert len(doc["results"][0]["energies"]) == 2


def test_config_file_and_override(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# run\nmodel = sextic3d\nN = 6\nk = 1\nformat = csv\n")
    assert read_config_file(cfg)["model"] == "sextic3d"
    code, out, _ = run_cli(capsys, "solve", "--config", str(cfg), "--N", "10")
    assert code == EXIT_OK and "9^3" in out and "5^3" not in out


def test_potential_file(tmp_path, capsys):
    pot = tmp_path / "ho.pot"
    pot.write_text("0.5 2\n")
    code, out, _ = run_cli(capsys, "solve", "--potential", str(pot), "--N", "30", "--k", "2")
    assert code == EXIT_OK
    assert parse_text_report(out)["29^1"] == pytest.approx([0.5, 1.5], abs=1e-7)


@pytest.mark.parametrize("argv", [
    ("solve", "--model", "pe", "--N", "0"),
    ("solve", "--model", "pe", "--N", "7"),
    ("solve", "--model", "pe", "--N", "x"),
    ("solve", "--model", "nope", "--N", "8"),
    ("solve", "--N", "8"),
    ("solve", "--model", "pe", "--N", "8", "--k", "0"),
    ("solve", "--potential", "/nonexistent/file", "--N", "8"),
])
def test_config_errors(capsys, argv):
    code, _, err = run_cli(capsys, *argv)
    assert code == EXIT_CONFIG and "error" in err


def test_bad_potential_file_reports_line(tmp_path, capsys):
    pot = tmp_path / "bad.pot"
    pot.write_text("0.5 2 0\n1.0 2\n")
    code, _, err = run_cli(capsys, "solve", "--potential", str(pot), "--N", "8")
    assert code == EXIT_CONFIG and "line 2" in err


def test_run_config_validation():
    with pytest.raises(ConfigError):
        RunConfig(model="pe", grids=[8], strategy="best").validate()
    with pytest.raises(ConfigError):
        RunConfig(potential="x", grids=[8], check=True).validate()
    assert parse_grid_list("18, 20") == [18, 20]


def test_threads_env(monkeypatch, capsys):
    monkeypatch.setenv("LSFCOLLOC_THREADS", "2")
    code, out, _ = run_cli(capsys, "solve", "--model", "pe", "--N", "8,10", "--format", "csv")
    assert code == EXIT_OK and "7^2" in out and "9^2" in out
    monkeypatch.setenv("LSFCOLLOC_THREADS", "many")
    code, _, _ = run_cli(capsys, "solve", "--model", "pe", "--N", "8,10")
    assert code == EXIT_CONFIG


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "lsfcolloc", "models"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and "pe_radial" in proc.stdout
