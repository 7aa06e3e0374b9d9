"""Presentation layer for pcurv: the click command line."""

from .cli import cli

__all__ = ["cli"]
