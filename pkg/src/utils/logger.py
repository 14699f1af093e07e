"""Logging configuration for yamabe-lab."""

import logging
import os
from typing import Optional

from rich.console import Console
from rich.logging import RichHandler

LOG_LEVEL_ENV = "YAMABE_LAB_LOG_LEVEL"


def _level_from_env(default: int) -> int:
    name = os.getenv(LOG_LEVEL_ENV, "").strip().upper()
    if not name:
        return default
    level = logging.getLevelName(name)
    return level if isinstance(level, int) else default


def setup_logging(level: Optional[int] = None, verbose: bool = False) -> None:
    """
    Configure logging for the application.

    Log records go to stderr through a rich handler; stdout is reserved for
    JSON reports. Worker threads of the geodesic probe and the profile
    tabulation are named in verbose mode.

    Args:
        level: Logging level (default: YAMABE_LAB_LOG_LEVEL, else INFO;
            DEBUG when verbose)
        verbose: Show thread names and full tracebacks
    """
    if level is None:
        level = logging.DEBUG if verbose else _level_from_env(logging.INFO)

    handler = RichHandler(
        console=Console(stderr=True),
        show_path=verbose,
        rich_tracebacks=verbose,
        log_time_format="%Y-%m-%d %H:%M:%S",
    )
    fmt = "[%(threadName)s] %(name)s - %(message)s" if verbose else "%(name)s - %(message)s"
    logging.basicConfig(level=level, format=fmt, handlers=[handler], force=True)


def get_logger(name: Optional[str] = None) -> logging.Logger:
    """Get a logger instance (root logger when name is None)."""
    return logging.getLogger(name)
