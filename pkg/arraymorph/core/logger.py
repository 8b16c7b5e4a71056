import logging
from typing import Any, Iterable

PACKAGE_LOGGER = "arraymorph"

_package_logger = logging.getLogger(PACKAGE_LOGGER)
if not _package_logger.handlers:
    _handler = logging.StreamHandler()
    _handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    _package_logger.addHandler(_handler)
    _package_logger.setLevel(logging.WARNING)


def get_logger(name: str) -> logging.Logger:
    """Logger for module ``name``, writing to stderr through the package handler."""
    return logging.getLogger(name)


def set_level(level: str) -> None:
    """Set the level of the package loggers (e.g. ``"INFO"``)."""
    _package_logger.setLevel(level.upper())


def log_issues(logger: logging.Logger, issues: Iterable[Any], prefix: str = "") -> None:
    """
    Log parse issues, errors at ERROR level and warnings at WARNING level.

    Args:
        logger (logging.Logger): The logger instance.
        issues: Objects with a ``severity`` enum whose value is "error" or "warning".
        prefix (str): An optional prefix, usually the input file name.
    """
    for issue in issues:
        level = logging.ERROR if issue.severity.value == "error" else logging.WARNING
        logger.log(level, f"{prefix}: {issue}" if prefix else str(issue))
