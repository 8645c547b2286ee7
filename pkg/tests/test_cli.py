"""
Tests for the command-line surface: exit codes, output files and determinism.
"""

import json
import math

import pytest
from typer.testing import CliRunner

from wavekit.cli.main import app, run
from wavekit.cli.utils import exit_code_for
from wavekit.lab.config import OUTPUT_DIR_ENV
from wavekit.lab.experiments import DispersionExperiment
from wavekit.models.base import BlowUpError, DegenerateCoefficientError, ValidationError


@pytest.fixture(autouse=True)
def no_env_output(monkeypatch):
    monkeypatch.delenv(OUTPUT_DIR_ENV, raising=False)


@pytest.fixture
def out(tmp_path):
    return str(tmp_path)


def manifest(tmp_path, command):
    paths = sorted(tmp_path.glob(f"{command}-*/manifest.json"))
    assert len(paths) == 1
    return json.loads(paths[0].read_text(encoding="utf-8"))


def table(tmp_path, command, name):
    (path,) = tmp_path.glob(f"{command}-*/{name}.csv")
    return path.read_text(encoding="utf-8").splitlines()


class TestExitCodes:

    def test_usage(self):
        assert run([]) == 64
        assert run(["nope"]) == 64
        assert run(["dispersion", "--n", "abc"]) == 64

    def test_mapping(self):
        assert exit_code_for(None) == 0
        assert exit_code_for(ValidationError("bad")) == 1
        assert exit_code_for(BlowUpError(1.0)) == 2
        assert exit_code_for(DegenerateCoefficientError("flat")) == 2
        assert exit_code_for(RuntimeError("unexpected")) == 2

    def test_unexpected_error_is_numerical_failure(self, tmp_path, out, monkeypatch, caplog):
        def explode(self):
            raise RuntimeError("boom")

        monkeypatch.setattr(DispersionExperiment, "execute", explode)
        assert run(["dispersion", "--n", "2", "--output-dir", out]) == 2
        assert "RuntimeError" in caplog.text

    def test_invalid_input(self, out):
        assert run(["dispersion", "--kmax=-1", "--output-dir", out]) == 1
        assert run(["evolve", "--N", "100", "--output-dir", out]) == 1
        assert run(["evolve", "--order", "21", "--output-dir", out]) == 1
        assert run(["dispersion", "--config", out + "/absent.yaml", "--output-dir", out]) == 1

    def test_inadmissible_family(self, out):
        args = ["soliton-profile", "--c", "1.2", "--kappa", "1.5", "--sigma-hat", "0.2", "--family", "elevated"]
        assert run(args + ["--output-dir", out]) == 1

    def test_dispersionless_equation(self, out):
        assert run(["soliton-profile", "--sigma-hat", "0.3333333333333333", "--output-dir", out]) == 2

    def test_sweep_too_short(self, out):
        assert run(["linear-sweep", "--epsilons", "0.02,0.01,0.005", "--output-dir", out]) == 1


class TestDispersion:

    def test_table(self, tmp_path, out):
        assert run(["dispersion", "--kmax", "1", "--n", "2", "--output-dir", out]) == 0
        lines = table(tmp_path, "dispersion", "dispersion")
        assert lines[0] == "kappa,omega2"
        kappa, omega2 = (float(v) for v in lines[2].split(","))
        assert kappa == 1.0
        assert omega2 == pytest.approx(9.81 * math.tanh(1.0), rel=1e-15)
        assert manifest(tmp_path, "dispersion")["summary"]["samples"] == 2

    def test_repeat_is_byte_identical(self, tmp_path, out):
        args = ["dispersion", "--kmax", "3", "--n", "17", "--sigma", "0.1", "--output-dir", out]
        assert run(args) == 0
        (path,) = tmp_path.glob("dispersion-*/dispersion.csv")
        first = path.read_bytes()
        assert run(args) == 0
        assert path.read_bytes() == first

    def test_config_file_with_flag(self, tmp_path, out):
        config = tmp_path / "run.yaml"
        config.write_text("dispersion:\n  kmax: 2.0\n  n: 3\n", encoding="utf-8")
        assert run(["dispersion", "--config", str(config), "--n", "5", "--output-dir", out]) == 0
        recorded = manifest(tmp_path, "dispersion")["config"]
        assert recorded["kmax"] == 2.0
        assert recorded["n"] == 5

    def test_env_output_dir(self, tmp_path, monkeypatch):
        monkeypatch.setenv(OUTPUT_DIR_ENV, str(tmp_path))
        assert run(["dispersion", "--n", "2"]) == 0
        assert manifest(tmp_path, "dispersion")["command"] == "dispersion"


class TestNumericalCommands:

    def test_global_residual(self, tmp_path, out):
        assert run(["global-residual", "--output-dir", out]) == 0
        summary = manifest(tmp_path, "global-residual")["summary"]
        assert summary["mode"] == "flat"
        assert summary["sup_norm"] < 1e-10

    def test_evolve(self, tmp_path, out):
        assert run(["evolve", "--order", "00", "--N", "64", "--dt", "0.01", "--steps", "5", "--output-dir", out]) == 0
        summary = manifest(tmp_path, "evolve")["summary"]
        assert summary["order"] == "00"
        assert summary["final_time"] == pytest.approx(0.05)
        assert summary["relative_drift"] < 1e-10
        assert len(table(tmp_path, "evolve", "energy")) == 7

    def test_growth(self, tmp_path, out):
        args = ["boussinesq", "--mode", "growth", "--sigma-hat", "0.2", "--wavenumber", "4",
                "--N", "64", "--dt", "0.05", "--steps", "10", "--output-dir", out]
        assert run(args) == 0
        summary = manifest(tmp_path, "boussinesq")["summary"]
        assert summary["growth_rate"] == pytest.approx(4.2583, abs=1e-4)
        assert summary["rate_error"] < 1e-6

    def test_soliton_atlas_single_speed(self, tmp_path, out):
        assert run(["soliton-atlas", "--c", "0.95", "--kappa", "0.5", "--sigma-hat", "0.4", "--output-dir", out]) == 0
        summary = manifest(tmp_path, "soliton-atlas")["summary"]
        assert summary["verdict"] == "both exist"
        assert summary["topology"] == "hyperbola"
        assert len(table(tmp_path, "soliton-atlas", "atlas")) == 2

    def test_manifold(self, tmp_path, out):
        assert run(["manifold", "--output-dir", out]) == 0
        summary = manifest(tmp_path, "manifold")["summary"]
        assert summary["topology"] == "hyperbola"
        assert summary["samples"] == 64

    def test_soliton_profile(self, tmp_path, out):
        assert run(["soliton-profile", "--family", "depression", "--output-dir", out]) == 0
        summary = manifest(tmp_path, "soliton-profile")["summary"]
        assert summary["ode_residual"] < 1e-9
        assert summary["amplitude"] < 0.0


class TestTyperApp:

    def test_runner_exit_codes(self, tmp_path, out):
        runner = CliRunner()
        ok = runner.invoke(app, ["dispersion", "--n", "2", "--output-dir", out])
        assert ok.exit_code == 0
        assert manifest(tmp_path, "dispersion")["summary"]["samples"] == 2
        bad = runner.invoke(app, ["manifold", "--count", "1", "--output-dir", out])
        assert bad.exit_code == 1

    def test_help_lists_commands(self):
        result = CliRunner().invoke(app, ["--help"])
        assert result.exit_code == 0
        for command in ("global-residual", "soliton-atlas", "boussinesq"):
            assert command in result.output
