#!/usr/bin/env python3
"""
Process wiring of the command-line front end: logging handlers and the
configuration singleton.

---
IdealGrowth - Growth and volume toolkit for ideal Coxeter polyhedra

Author: IdealGrowth contributors
Copyright (C) 2025 IdealGrowth contributors
License: AGPL-3.0 <https://www.gnu.org/licenses/>
"""

# Standard libraries
import logging, logging.handlers
import sys
from typing import Optional

# Internal libraries
from local_config import LocalConfig

logger = logging.getLogger(__name__)

# Logging configuration
LOGGING_FORMAT = "%(asctime)s | %(levelname)-8s | %(name)s | %(message)s"
LOGGING_LEVELS = {
    "debug": logging.DEBUG,
    "info": logging.INFO,
    "warning": logging.WARNING,
    "error": logging.ERROR,
}

# Handlers installed by the last `configure_logging` call
_installed_handlers: list[logging.Handler] = []


class ColorFormatter(logging.Formatter):
    """
    Log formatter that colors only the level name, when the stream is a
    terminal.
    """

    COLORS = {
        "DEBUG": "\033[94m",  # Blue
        "INFO": "\033[92m",  # Green
        "WARNING": "\033[93m",  # Yellow
        "ERROR": "\033[91m",  # Red
        "CRITICAL": "\033[41m",  # White on Red
        "RESET": "\033[0m",  # Reset color
    }

    def __init__(self, colored: bool = True):
        super().__init__(LOGGING_FORMAT)
        self._colored = colored

    def format(self, record: logging.LogRecord):
        if not self._colored:
            return super().format(record)
        # The record is shared with the other handlers
        levelname = record.levelname
        color = self.COLORS.get(levelname, self.COLORS["RESET"])
        record.levelname = f"{color}{levelname}{self.COLORS['RESET']}"
        try:
            return super().format(record)
        finally:
            record.levelname = levelname


def configure_logging(level: int = logging.WARNING, log_file: Optional[str] = None):
    """
    Configure the root logger.

    Logs go to stderr, stdout being reserved for the reports. When
    `log_file` is given, logs are also saved with a time rotating
    strategy: a new file is created at midnight and files are kept up to
    7 days. Calling again replaces the handlers of the previous call.
    """
    root = logging.getLogger()
    for handler in _installed_handlers:
        root.removeHandler(handler)
        handler.close()
    _installed_handlers.clear()

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(ColorFormatter(colored=sys.stderr.isatty()))
    _installed_handlers.append(console_handler)

    if log_file:
        file_handler = logging.handlers.TimedRotatingFileHandler(
            filename=log_file,
            when="midnight",
            interval=1,
            backupCount=7,
            encoding="utf-8",
        )
        file_handler.setFormatter(logging.Formatter(LOGGING_FORMAT))
        _installed_handlers.append(file_handler)

    for handler in _installed_handlers:
        root.addHandler(handler)
    root.setLevel(level)


def app_bootstrap(config_path: Optional[str] = None, verbose: bool = False) -> LocalConfig:
    """
    Load the configuration then configure logging from it.

    Args:
        config_path (Optional[str]): `.ini` file, schema defaults if `None`.
        verbose (bool): Log at debug level whatever the configuration.

    Returns:
        LocalConfig: Configuration handle.

    Raises:
        ConfigError: Invalid configuration file or override.
    """
    # Errors raised while loading still reach stderr
    configure_logging(logging.DEBUG if verbose else logging.WARNING)

    config = LocalConfig(config_path)
    logging_conf = config.section("logging")

    level = logging.DEBUG if verbose else LOGGING_LEVELS[logging_conf["level"]]
    configure_logging(level, logging_conf["file"] or None)
    config.show_config()
    return config
