"""
Smoke tests for GFC-Jac

Basic tests to verify the ambient stack works.
"""

import pytest

import gfcjac
from gfcjac.core.errors import InputError
from gfcjac.utils.config import Config, default_precision, max_group_order
from gfcjac.utils.logger import get_logger, setup_logger


class TestLogger:
    """Test logger functionality."""

    def test_logger_setup(self):
        """Test logger initialization without exceptions."""
        logger = setup_logger("test_logger", level="DEBUG")
        assert logger is not None

    def test_log_file(self, tmp_path):
        """Test the optional file sink receives DEBUG records."""
        log_file = tmp_path / "logs" / "gfcjac.log"
        logger = setup_logger("test_file", level="WARNING", log_file=str(log_file))
        logger.debug("written to the file only")
        assert "written to the file only" in log_file.read_text(encoding="utf-8")
        setup_logger()

    def test_unknown_level(self):
        """Test an unknown level is an input error."""
        with pytest.raises(InputError, match="unknown log level"):
            setup_logger("test_level", level="CHATTY")
        setup_logger()

    def test_get_logger(self):
        """Test get_logger function."""
        logger = get_logger("test_get_logger")
        assert logger is not None


class TestConfig:
    """Test configuration functionality."""

    def test_config_initialization(self):
        """Test config initialization."""
        config = Config()
        assert config.get("PRECISION") == 256
        assert config.get("MAX_GROUP_ORDER") == 20_000_000

    def test_config_get_default(self):
        """Test config get with default value."""
        config = Config()
        value = config.get("NONEXISTENT_KEY", "default_value")
        assert value == "default_value"

    def test_config_set_get(self):
        """Test config set and get."""
        config = Config()
        config.set("test_key", "test_value")
        assert config.get("test_key") == "test_value"

    def test_environment_override(self, monkeypatch):
        """Test GFC_* variables override the defaults."""
        monkeypatch.setenv("GFC_MAX_GROUP_ORDER", "1_000")
        monkeypatch.setenv("GFC_PRECISION", "64")
        assert max_group_order() == 1000
        assert default_precision() == 64

    def test_bad_environment(self, monkeypatch):
        """Test non-integer guards are rejected."""
        monkeypatch.setenv("GFC_MAX_TUPLES", "many")
        with pytest.raises(InputError, match="GFC_MAX_TUPLES"):
            Config()

    def test_toml_file(self, tmp_path):
        """Test the [gfcjac] table of a TOML file."""
        path = tmp_path / "gfcjac.toml"
        path.write_text("[gfcjac]\nprecision = 512\nlog_level = \"DEBUG\"\n", encoding="utf-8")
        config = Config(str(path))
        assert config.get("PRECISION") == 512
        assert config.get("LOG_LEVEL") == "DEBUG"

    def test_missing_file_ignored(self, tmp_path):
        """Test a missing file leaves the defaults."""
        config = Config(str(tmp_path / "absent.toml"))
        assert config.to_dict()["APP_NAME"] == "GFC-Jac"


class TestProjectStructure:
    """Test project structure."""

    def test_version(self):
        """Test package metadata."""
        assert gfcjac.__version__ == Config().get("APP_VERSION")

    def test_main_module_exists(self):
        """Test that main module can be imported."""
        from gfcjac.main import main

        assert callable(main)
