"""Logging infrastructure for pcurv."""

from .logger import Logger, correlation_id, get_logger, init_logger, setup_logging

__all__ = [
    "Logger",
    "get_logger",
    "init_logger",
    "correlation_id",
    "setup_logging"
]
