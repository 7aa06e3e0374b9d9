"""Caching infrastructure for pcurv."""

from .parse_cache import ParseCache

__all__ = ["ParseCache"]
