"""
Unit tests for run configuration
"""

from argparse import Namespace

import pytest
from pydantic import ValidationError

from src.utils.config import Config, LoggingConfig, OutputConfig, ParallelConfig


class TestConfigDefaults:
    """Tests for default values"""

    def test_defaults(self):
        config = Config()
        assert config.parallel.workers == 1
        assert config.logging.level == "WARNING"
        assert config.logging.file is None
        assert config.output.format == "csv"


class TestConfigValidation:
    """Tests for field validation"""

    def test_level_is_normalized(self):
        assert LoggingConfig(level="debug").level == "DEBUG"

    def test_unknown_level(self):
        with pytest.raises(ValidationError):
            LoggingConfig(level="chatty")

    def test_unknown_format(self):
        with pytest.raises(ValidationError):
            OutputConfig(format="xml")

    def test_workers_must_be_positive(self):
        with pytest.raises(ValidationError):
            ParallelConfig(workers=0)


class TestFromArgs:
    """Tests for building configuration from parsed flags"""

    def test_full_namespace(self):
        args = Namespace(workers=4, log_level="info", log_file="logs/run.log", format="json")
        config = Config.from_args(args)
        assert config.parallel.workers == 4
        assert config.logging.level == "INFO"
        assert config.logging.file == "logs/run.log"
        assert config.output.format == "json"

    def test_missing_flags_fall_back(self):
        config = Config.from_args(Namespace())
        assert config == Config()

    def test_unset_format_uses_default(self):
        assert Config.from_args(Namespace(format=None)).output.format == "csv"

    def test_invalid_flag_raises(self):
        with pytest.raises(ValidationError):
            Config.from_args(Namespace(workers=-2))
