"""Command Line Interface for pcurv."""

from .main import cli

__all__ = ["cli"]
