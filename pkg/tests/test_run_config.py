# tests/test_run_config.py
import pytest

from config import DEFAULT_BUDGETS, DEFAULT_MASTER_SEED
from errors import ConfigError
from models.run_config import RunConfig


def test_defaults_come_from_config():
    config = RunConfig()
    assert config.budgets == DEFAULT_BUDGETS
    assert config.seed == DEFAULT_MASTER_SEED
    assert config.effective_split_seed == DEFAULT_MASTER_SEED
    assert config.alpha == 0.1 and config.peak_separation_ms == 250.0


def test_file_values_are_typed():
    config = RunConfig.from_text(
        "# desk run\n"
        "features = out/features.csv\n"
        "alpha=0.2\n"
        "budgets=1_000, 2000\n"
        "presets=deep\n"
        "split_seed=4\n")
    assert config.features == "out/features.csv"
    assert config.alpha == 0.2
    assert config.budgets == [1000, 2000]
    assert config.presets == ["deep"]
    assert config.effective_split_seed == 4


def test_flags_override_file(tmp_path):
    path = tmp_path / "desk.cfg"
    path.write_text("seed=3\nbudget=500\n")
    config = RunConfig.load(str(path)).override(seed=9, budget=None, jobs="2")
    assert config.seed == 9 and config.budget == 500 and config.jobs == 2


def test_unknown_key_reports_line():
    with pytest.raises(ConfigError) as info:
        RunConfig.from_text("seed=1\ncolour=blue\n")
    assert info.value.line == 2


def test_line_without_equals():
    with pytest.raises(ConfigError):
        RunConfig.from_text("seed\n")


def test_bad_number():
    with pytest.raises(ConfigError):
        RunConfig().override(alpha="fast")


def test_text_round_trip():
    config = RunConfig(features="f.csv", budgets=[10, 20], split_seed=77)
    assert RunConfig.from_text(config.to_text()) == config
