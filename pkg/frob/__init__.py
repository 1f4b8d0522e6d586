"""Exact arithmetic for the Frobenius coin-exchange problem and k-representable integers."""

import logging
import os
from logging.handlers import RotatingFileHandler

from rich.console import Console
from rich.logging import RichHandler

from config import Config
from frob.errors import InvalidInputError

__version__ = '1.0.0'

logger = logging.getLogger('frob')


def _resolve_level(name):
    level = logging.getLevelName(str(name).strip().upper())
    if not isinstance(level, int):
        raise InvalidInputError(f"FROB_LOG_LEVEL must be a logging level name, got {name!r}")
    return level


def configure_logging(config_class=Config, console=None):
    """Attach handlers to the package logger according to config_class."""
    level = _resolve_level(config_class.LOG_LEVEL)
    logger.setLevel(level)
    logger.handlers = []

    if console is None:
        console = Console(stderr=True)
    stream_handler = RichHandler(console=console, show_path=False, rich_tracebacks=False)
    stream_handler.setLevel(level)
    logger.addHandler(stream_handler)

    if config_class.LOG_FILE:
        log_dir = os.path.dirname(config_class.LOG_FILE)
        if log_dir and not os.path.exists(log_dir):
            os.makedirs(log_dir)
        file_handler = RotatingFileHandler(
            config_class.LOG_FILE, maxBytes=10240, backupCount=10
        )
        file_handler.setFormatter(logging.Formatter(
            '%(asctime)s %(levelname)s: %(message)s [in %(pathname)s:%(lineno)d]'))
        file_handler.setLevel(logging.DEBUG)
        logger.addHandler(file_handler)
    return logger
