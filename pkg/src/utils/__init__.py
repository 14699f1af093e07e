"""Utility modules."""

from .logger import get_logger, setup_logging
from .config import NumericsConfig, get_default_config, set_default_config

__all__ = [
    "get_logger",
    "setup_logging",
    "NumericsConfig",
    "get_default_config",
    "set_default_config",
]
