import logging
import os
from logging.handlers import RotatingFileHandler

import pytest

from uncertframes.config.config_loader import ConfigLoadError, ConfigLoader, ConfigValidationError
from uncertframes.config.config_manager import ConfigManager
from uncertframes.config.config_schema import AppConfig
from uncertframes.pipelines.search_pipeline import THREADS_ENV, resolve_threads
from uncertframes.utils.exceptions import (
    InputError,
    MatrixFormatError,
    RegimeError,
    UncertFramesError,
)
from uncertframes.utils.filepaths import resolve_project_path
from uncertframes.utils.logger import CustomLogger, parse_level


@pytest.fixture(scope="module")
def test_config() -> AppConfig:
    return ConfigManager().appconfig


# -------------------------
# Configuration
# -------------------------

def test_shipped_configuration_defaults(test_config):
    assert test_config.tolerances.support_rel_tol == pytest.approx(1e-10)
    assert test_config.tolerances.support_abs_floor == pytest.approx(1e-14)
    assert test_config.constructions.cond_cap == pytest.approx(1e6)
    assert test_config.search.max_exhaustive_dim == 12
    assert test_config.search.minor_enumeration_cap == 1_000_000
    assert test_config.metadata.tool_name == "uncertframes"


def test_config_manager_is_singleton():
    assert ConfigManager() is ConfigManager()
    assert ConfigManager().search is ConfigManager().appconfig.search


def test_config_loader_missing_file(tmp_path):
    with pytest.raises(ConfigLoadError):
        ConfigLoader(tmp_path / "missing.yaml")


def test_config_loader_rejects_bad_yaml(tmp_path):
    path = tmp_path / "bad.yaml"
    path.write_text("paths: [unclosed\n")
    with pytest.raises(ConfigLoadError):
        ConfigLoader(path)


def test_config_loader_rejects_incomplete_schema(tmp_path):
    path = tmp_path / "partial.yaml"
    path.write_text("paths:\n  logs: logs\n  output: output\n")
    with pytest.raises(ConfigValidationError, match="tolerances"):
        ConfigLoader(path)


# -------------------------
# Logging and paths
# -------------------------

def test_resolve_project_path():
    resolved_path = resolve_project_path("logs")
    assert os.path.isabs(resolved_path)
    assert resolved_path.endswith("logs")
    assert resolve_project_path("/tmp/elsewhere") == "/tmp/elsewhere"


def test_logger_writes_to_rotating_file():
    logger = CustomLogger(module_name="uncertframes.tests").get_logger()
    assert isinstance(logger, logging.Logger)
    assert any(isinstance(handler, RotatingFileHandler) for handler in logger.handlers)
    # a second call must not stack handlers
    again = CustomLogger(module_name="uncertframes.tests").get_logger()
    assert len(again.handlers) == len(logger.handlers)


# -------------------------
# Exceptions and environment
# -------------------------

def test_exception_hierarchy():
    assert issubclass(RegimeError, InputError)
    assert issubclass(InputError, ValueError)
    assert issubclass(MatrixFormatError, UncertFramesError)
    assert str(MatrixFormatError("bad cell", row=3)) == "row 3: bad cell"


def test_thread_cap_from_environment(monkeypatch):
    monkeypatch.delenv(THREADS_ENV, raising=False)
    assert resolve_threads(4) == 4
    monkeypatch.setenv(THREADS_ENV, "2")
    assert resolve_threads(4) == 2
    assert resolve_threads(1) == 1
    monkeypatch.setenv(THREADS_ENV, "0")
    with pytest.raises(InputError):
        resolve_threads(4)


def test_parse_level():
    assert parse_level("debug", "logging.level") == logging.DEBUG
    with pytest.raises(ValueError, match="logging.level"):
        parse_level("chatty", "logging.level")
