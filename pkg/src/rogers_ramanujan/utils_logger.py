"""Provide centralized logging for the Rogers-Ramanujan evaluation project.

This module configures project-wide logging so iterative kernels, fallbacks
and residual warnings can be traced while reports stay on standard output.

Module Information:
    - Filename: utils_logger.py
    - Module: utils_logger
    - Location: src/rogers_ramanujan/

Key Concepts:
    - Centralized logging configuration with Loguru
    - Log levels (DEBUG for iteration counts, WARNING for residual problems)
    - Optional file-based log persistence with rotation
    - Library records stay disabled until init_logger() enables them
"""

import pathlib
import sys

from loguru import logger

PACKAGE_NAME = "rogers_ramanujan"
LOG_FORMAT = "{time:YYYY-MM-DD HH:mm}:{level:<7} AT {file}:{line}: {message}"

_log_file_path: pathlib.Path | None = None


def _project_root(start: pathlib.Path | None = None) -> pathlib.Path:
    """Find the project root by walking up until we see a pyproject.toml or .git.

    Falls back to the directory containing this file.
    """
    here = (start or pathlib.Path(__file__)).resolve()
    for p in [here, *here.parents]:
        if (p / "pyproject.toml").exists() or (p / ".git").exists():
            return p
    return here.parent  # fallback


project_root = _project_root()


def _stderr_sink(message: str) -> None:
    # Resolve sys.stderr at write time so redirected streams (CLI runners, pytest capture) work.
    sys.stderr.write(message)


def get_log_file_path() -> pathlib.Path:
    """Return the path to the active log file, or the default path if none is active."""
    if _log_file_path is not None:
        return _log_file_path
    return project_root / "rrcf.log"


def init_logger(
    level: str = "INFO",
    *,
    log_dir: str | pathlib.Path | None = None,
    log_file_name: str = "rrcf.log",
) -> pathlib.Path | None:
    """Initialize the logger and return the log file path, if a file sink was requested.

    Reports are written to standard output, so console logging always goes to stderr.
    Calling this again replaces the previous configuration.

    Args:
        level (str): Logging level (e.g., "INFO", "DEBUG").
        log_dir: Directory where the log file will be written; no file sink when None.
        log_file_name: File name for the log file.

    Returns:
        pathlib.Path | None: The resolved path to the log file, or None.
    """
    global _log_file_path

    logger.remove()
    logger.enable(PACKAGE_NAME)
    logger.add(_stderr_sink, level=level, format=LOG_FORMAT)

    if log_dir is None:
        _log_file_path = None
        return None

    log_folder = pathlib.Path(log_dir).expanduser().resolve()
    log_file = log_folder / log_file_name
    try:
        log_folder.mkdir(parents=True, exist_ok=True)
        logger.add(
            log_file,
            level=level,
            enqueue=True,
            backtrace=True,
            diagnose=False,
            rotation="10 MB",
            retention="7 days",
            encoding="utf-8",
            format=LOG_FORMAT,
        )
        logger.info(f"Logging to file: {log_file}")
        _log_file_path = log_file
    except OSError as e:
        logger.error(f"Error configuring logger to write to file: {e}")
        _log_file_path = None
        return None

    return log_file


__all__ = ["get_log_file_path", "init_logger", "logger", "project_root"]
