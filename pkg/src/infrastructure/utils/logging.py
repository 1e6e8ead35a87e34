"""
Logging utilities

The package logs through the 'qdcart' logger. Standard output carries
reports and CSV tables, so the handler writes to standard error.
"""
import contextlib
import logging
import sys

LOGGER_NAME = 'qdcart'
FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

logger = logging.getLogger(LOGGER_NAME)
logger.setLevel(logging.INFO)
logger.propagate = False

if not any(getattr(handler, "qdcart_console", False) for handler in logger.handlers):
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(logging.INFO)
    console_handler.setFormatter(logging.Formatter(FORMAT))
    console_handler.qdcart_console = True
    logger.addHandler(console_handler)


def set_level(level: int):
    """Apply ``level`` to the package logger and all of its handlers"""
    logger.setLevel(level)
    for handler in logger.handlers:
        handler.setLevel(level)


def enable_debug():
    """Enable debug logging"""
    set_level(logging.DEBUG)


def disable_debug():
    """Disable debug logging"""
    set_level(logging.INFO)


def set_quiet():
    """Only warnings and errors"""
    set_level(logging.WARNING)


def detail_level(parent_level: int) -> int:
    """Level for per-fit summaries of repeated fits: DEBUG runs keep them, others drop them"""
    return logging.DEBUG if parent_level <= logging.DEBUG else logging.WARNING


@contextlib.contextmanager
def quiet_fits():
    """Silence per-fit INFO summaries inside benchmark replicates and held-out splits"""
    previous = logger.level
    logger.setLevel(detail_level(logger.getEffectiveLevel()))
    try:
        yield
    finally:
        logger.setLevel(previous)
