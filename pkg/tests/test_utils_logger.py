"""Test the logger utility module.

Module Information:
    - Filename: test_utils_logger.py
    - Module: test_utils_logger
    - Location: tests/

Testing logging is important because:
    - Iteration counts and fallbacks are only visible through the logs
    - Reports own stdout, so logs must stay on stderr or in a file
"""

from pathlib import Path

from rogers_ramanujan import utils_logger


def test_logger_initialization():
    """Verify logger can be initialized with default settings."""
    assert utils_logger.init_logger() is None
    assert utils_logger.logger is not None


def test_logger_initialization_with_debug_level():
    """Verify logger accepts different log levels."""
    utils_logger.init_logger(level="DEBUG")
    assert utils_logger.logger is not None


def test_default_log_file_path():
    """Without a file sink the default path is rrcf.log at the project root."""
    utils_logger.init_logger()
    log_path = utils_logger.get_log_file_path()
    assert isinstance(log_path, Path)
    assert log_path.suffix == ".log"
    assert log_path.parent == utils_logger.project_root


def test_logger_creates_log_file(tmp_path):
    """Verify logger can create log files."""
    log_path = utils_logger.init_logger("INFO", log_dir=tmp_path / "logs", log_file_name="test.log")
    assert log_path == (tmp_path / "logs" / "test.log").resolve()
    assert utils_logger.get_log_file_path() == log_path

    utils_logger.logger.info("Smoke test message")
    utils_logger.logger.complete()

    assert log_path.exists(), "Log file not created"
    assert "Smoke test message" in log_path.read_text(encoding="utf-8")
    utils_logger.init_logger()


def test_logs_go_to_stderr(capsys):
    """Reports own stdout; log records must not land there."""
    utils_logger.init_logger("INFO")
    utils_logger.logger.info("to stderr")
    captured = capsys.readouterr()
    assert "to stderr" in captured.err
    assert "to stderr" not in captured.out
