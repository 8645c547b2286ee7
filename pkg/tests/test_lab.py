"""
Tests for the experiment registry, configuration merging and result files.
"""

import json

import pytest

from wavekit.lab import experiments  # noqa: F401
from wavekit.lab.config import OUTPUT_DIR_ENV, ConfigManager
from wavekit.lab.experiments import DispersionExperiment, SolitonProfileExperiment
from wavekit.lab.registry import ExperimentRegistry, get_global_registry
from wavekit.lab.result_manager import ResultManager, config_digest
from wavekit.lab.types import RunStatus
from wavekit.models.base import AdmissionError, ValidationError
from wavekit.models.config import DispersionConfig, EvolveConfig, SolitonProfileConfig


@pytest.fixture(autouse=True)
def no_env_output(monkeypatch):
    monkeypatch.delenv(OUTPUT_DIR_ENV, raising=False)


class TestRegistry:

    def test_every_command_registered(self):
        assert get_global_registry().list_experiments() == [
            "boussinesq", "dispersion", "evolve", "global-residual",
            "linear-sweep", "manifold", "soliton-atlas", "soliton-profile",
        ]

    def test_info(self):
        info = get_global_registry().get_experiment_info("dispersion")
        assert info["class_name"] == "DispersionExperiment"
        assert "linear" in info["tags"]

    def test_search_by_tag(self):
        found = get_global_registry().search_experiments("soliton")
        assert sorted(found) == ["boussinesq", "manifold", "soliton-atlas", "soliton-profile"]

    def test_unknown_command(self):
        with pytest.raises(ValidationError):
            get_global_registry().create_experiment("nope", DispersionConfig())

    def test_register_rejects_non_experiments(self):
        registry = ExperimentRegistry()
        with pytest.raises(ValidationError):
            registry.register("x", object)
        assert registry.unregister("x") is False


class TestConfigManager:

    def test_missing_file(self, tmp_path):
        with pytest.raises(ValidationError):
            ConfigManager(str(tmp_path / "absent.yaml"))

    def test_flags_override_file(self, tmp_path):
        path = tmp_path / "run.yaml"
        path.write_text("dispersion:\n  kmax: 2.0\n  n: 3\n", encoding="utf-8")
        config = ConfigManager(str(path)).resolve("dispersion", {"n": 5, "g": None})
        assert config.kmax == 2.0
        assert config.n == 5
        assert config.g == 9.81

    def test_env_output_dir(self, tmp_path, monkeypatch):
        path = tmp_path / "run.yaml"
        path.write_text("dispersion:\n  output_dir: from-file\n", encoding="utf-8")
        monkeypatch.setenv(OUTPUT_DIR_ENV, "from-env")
        manager = ConfigManager(str(path))
        assert manager.resolve("dispersion").output_dir == "from-env"
        assert manager.resolve("dispersion", {"output_dir": "from-flag"}).output_dir == "from-flag"

    def test_invalid_values(self):
        with pytest.raises(ValidationError):
            ConfigManager().resolve("evolve", {"N": 100})
        with pytest.raises(ValidationError):
            ConfigManager().resolve("evolve", {"order": "21"})

    def test_unknown_command(self):
        with pytest.raises(ValidationError):
            ConfigManager.model_for("nope")


class TestResultManager:

    def test_csv_format(self, tmp_path):
        path = ResultManager(str(tmp_path)).write_csv(tmp_path, "table", ("a", "b", "c"), [(0.1, True, 3)])
        assert path.read_text(encoding="utf-8") == "a,b,c\n0.10000000000000001,true,3\n"

    def test_digest(self):
        a = DispersionConfig(kmax=1.0)
        assert config_digest(a) == config_digest(DispersionConfig(kmax=1.0))
        assert config_digest(a) != config_digest(DispersionConfig(kmax=2.0))
        assert len(config_digest(a)) == 8

    def test_defaults_differ_per_command(self):
        assert config_digest(EvolveConfig()) != config_digest(DispersionConfig())


class TestExperimentLifecycle:

    def test_dispersion_run(self, tmp_path):
        config = DispersionConfig(output_dir=str(tmp_path), kmax=1.0, n=3)
        result = DispersionExperiment(config).run()
        assert result.succeeded
        assert result.metrics["samples"] == 3

        manifest = json.loads((tmp_path / f"dispersion-{config_digest(config)}" / "manifest.json").read_text())
        assert manifest["command"] == "dispersion"
        assert manifest["files"] == ["dispersion.csv"]
        assert manifest["config"]["kmax"] == 1.0
        assert set(manifest["versions"]) == {"wavekit", "numpy", "scipy", "pydantic"}

        manager = ResultManager(str(tmp_path))
        runs = manager.list_runs("dispersion")
        assert len(runs) == 1
        assert runs[0]["status"] == "COMPLETED"
        assert manager.list_runs("evolve") == []
        entry = manager.get_run(f"dispersion-{config_digest(config)}")
        assert entry["metrics"]["samples"] == 3
        assert manager.get_run("missing") == {}

    def test_failure_is_captured(self, tmp_path):
        config = SolitonProfileConfig(output_dir=str(tmp_path), c=1.2, kappa=1.5, sigma_hat=0.2, family="elevated")
        result = SolitonProfileExperiment(config).run()
        assert result.status == RunStatus.FAILED
        assert isinstance(result.error, AdmissionError)
        assert "beta" in result.error_message
        assert ResultManager(str(tmp_path)).list_runs()[0]["status"] == "FAILED"
