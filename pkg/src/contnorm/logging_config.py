# contnorm/logging_config.py
"""
Package-wide logger factory.

Every module creates its logger with ``get_logger(__name__)``. The level is
read once from the ``CONTNORM_LOG_LEVEL`` environment variable (default
WARNING) and can be changed later with ``set_level``.
"""
import logging
import os

LOG_LEVEL_ENV = "CONTNORM_LOG_LEVEL"
_ROOT_NAME = "contnorm"
_FORMAT = "%(asctime)s %(levelname)-7s %(name)s: %(message)s"

_configured = False


def _configure_root() -> None:
    global _configured
    if _configured:
        return
    root = logging.getLogger(_ROOT_NAME)
    if not root.handlers:
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter(_FORMAT))
        root.addHandler(handler)
    level_name = os.environ.get(LOG_LEVEL_ENV, "WARNING").upper()
    root.setLevel(getattr(logging, level_name, logging.WARNING))
    root.propagate = False
    _configured = True


def get_logger(name: str) -> logging.Logger:
    """
    Get a logger living under the package root logger.

    Args:
        name: Usually the calling module's ``__name__``

    Returns:
        Configured logger
    """
    _configure_root()
    if not name.startswith(_ROOT_NAME):
        name = f"{_ROOT_NAME}.{name}"
    return logging.getLogger(name)


def set_level(level: int) -> None:
    """Override the package log level (used by the CLI ``--verbose`` flag)."""
    _configure_root()
    logging.getLogger(_ROOT_NAME).setLevel(level)
