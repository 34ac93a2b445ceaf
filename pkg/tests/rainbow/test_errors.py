"""Tests for error codes, exit-code mapping and configuration layering."""

import importlib

import pytest

from rainbow.core import config as config_module
from rainbow.core import settings as settings_module
from rainbow.core.config import load_rainbow_config, require_keys
from rainbow.core.errors import (
    ERROR_MESSAGES,
    EXIT_BUDGET,
    EXIT_USAGE,
    EXIT_VERIFICATION_FAILED,
    AddressError,
    BudgetExceededError,
    DegenerateInputError,
    ErrorCode,
    RainbowError,
    exit_code_for,
    get_error_message,
)
from shared.utils.config_utils import ConfigError, apply_overrides, expand_path, load_config_file, merge_sections


class TestErrorMessages:
    def test_every_code_has_a_message(self):
        assert set(ERROR_MESSAGES) == set(ErrorCode)

    def test_detail_is_appended(self):
        message = get_error_message(ErrorCode.NOT_HORTON, "Point 3 is too low.")
        assert message.startswith(ERROR_MESSAGES[ErrorCode.NOT_HORTON])
        assert message.endswith("Point 3 is too low.")

    def test_exception_carries_code_and_detail(self):
        error = AddressError("Address '0001' is too deep for n=8.")
        assert error.code == ErrorCode.ADDRESS_TOO_DEEP
        assert error.detail == "Address '0001' is too deep for n=8."
        assert isinstance(error, RainbowError)
        assert isinstance(error, ValueError)

    def test_budget_error_records_figures(self):
        error = BudgetExceededError(500, 100)
        assert (error.estimate, error.budget) == (500, 100)
        assert "500" in str(error)


class TestExitCodes:
    def test_budget(self):
        assert exit_code_for(ErrorCode.BUDGET_EXCEEDED) == EXIT_BUDGET

    def test_verification(self):
        assert exit_code_for(ErrorCode.VERIFICATION_FAILED) == EXIT_VERIFICATION_FAILED

    @pytest.mark.parametrize("code", [ErrorCode.DEGENERATE_INPUT, ErrorCode.INVALID_FILE_FORMAT, ErrorCode.NOT_HORTON])
    def test_input_problems_are_usage_errors(self, code):
        assert exit_code_for(code) == EXIT_USAGE

    def test_degenerate_input_code(self):
        assert exit_code_for(DegenerateInputError().code) == EXIT_USAGE


@pytest.fixture
def clean_config(monkeypatch, tmp_path):
    for name in ("RAINBOW_BUDGET", "RAINBOW_THREADS", "RAINBOW_LOG_LEVEL"):
        monkeypatch.delenv(name, raising=False)
    monkeypatch.chdir(tmp_path)
    monkeypatch.setattr(config_module, "DEFAULT_CONFIG_PATH", tmp_path / "missing.yaml")
    return tmp_path


class TestConfigLayers:
    def test_defaults(self, clean_config):
        config = load_rainbow_config(None, {})
        assert config["budget"] == 10**9
        assert config["threads"] == 1
        assert config["output_format"] == "text"
        assert config["random"]["grid_size"] == 1000

    def test_yaml_overrides_defaults_and_keeps_nested_keys(self, clean_config):
        path = clean_config / "local.yaml"
        path.write_text("threads: 3\nplot:\n  cluster_zoom: 40\n")
        config = load_rainbow_config(path, {})
        assert config["threads"] == 3
        assert config["plot"]["cluster_zoom"] == 40
        assert config["plot"]["width_inches"] == 6.0

    def test_environment_overrides_yaml(self, clean_config, monkeypatch):
        path = clean_config / "local.yaml"
        path.write_text("budget: 500\nthreads: 3\n")
        monkeypatch.setenv("RAINBOW_BUDGET", "700")
        config = load_rainbow_config(path, {})
        assert config["budget"] == 700
        assert config["threads"] == 3

    def test_cli_overrides_everything(self, clean_config, monkeypatch):
        monkeypatch.setenv("RAINBOW_THREADS", "2")
        config = load_rainbow_config(None, {"threads": 4, "budget": None})
        assert config["threads"] == 4
        assert config["budget"] == 10**9

    def test_bad_environment_value(self, clean_config, monkeypatch):
        monkeypatch.setenv("RAINBOW_THREADS", "many")
        with pytest.raises(ConfigError):
            load_rainbow_config(None, {})

    def test_bad_environment_does_not_break_import(self, clean_config, monkeypatch):
        monkeypatch.setenv("RAINBOW_BUDGET", "abc")
        importlib.reload(settings_module)
        with pytest.raises(ConfigError):
            load_rainbow_config(None, {})

    @pytest.mark.parametrize(
        "overrides",
        [{"threads": 0}, {"budget": -1}, {"log_level": "LOUD"}, {"output_format": "xml"}, {"plot": 3}],
    )
    def test_invalid_values(self, clean_config, overrides):
        with pytest.raises(ConfigError):
            load_rainbow_config(None, overrides)

    def test_missing_file(self, clean_config):
        with pytest.raises(ConfigError):
            load_rainbow_config(clean_config / "absent.yaml", {})

    def test_require_keys(self):
        require_keys({"k": 4}, ["k"])
        with pytest.raises(ConfigError):
            require_keys({"k": None}, ["k"])


class TestConfigUtils:
    def test_non_mapping_yaml(self, tmp_path):
        path = tmp_path / "list.yaml"
        path.write_text("- 1\n- 2\n")
        with pytest.raises(ConfigError):
            load_config_file(path)

    def test_unparsable_yaml(self, tmp_path):
        path = tmp_path / "broken.yaml"
        path.write_text("budget: [1, 2\n")
        with pytest.raises(ConfigError):
            load_config_file(path)

    def test_merge_sections_is_recursive(self):
        merged = merge_sections({"plot": {"a": 1, "b": 2}, "x": 1}, {"plot": {"b": 3}})
        assert merged == {"plot": {"a": 1, "b": 3}, "x": 1}

    def test_apply_overrides_skips_none(self):
        assert apply_overrides({"a": 1, "b": 2}, {"a": None, "b": 5}) == {"a": 1, "b": 5}

    def test_apply_overrides_leaves_input_alone(self):
        base = {"budget": 10, "plot": {"cluster_zoom": 1.0, "point_size": 18}}
        merged = apply_overrides(base, {"plot": {"cluster_zoom": 40.0}})
        assert merged["plot"] == {"cluster_zoom": 40.0, "point_size": 18}
        assert base["plot"]["cluster_zoom"] == 1.0

    def test_empty_yaml_is_an_empty_mapping(self, tmp_path):
        path = tmp_path / "empty.yaml"
        path.write_text("")
        assert load_config_file(path) == {}

    def test_expand_path(self, monkeypatch, tmp_path):
        monkeypatch.setenv("RAINBOW_OUT", str(tmp_path))
        assert expand_path("$RAINBOW_OUT/sets/a.json") == tmp_path / "sets" / "a.json"
        assert expand_path(None) is None
