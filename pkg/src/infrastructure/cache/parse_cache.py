"""LRU cache for parsed expressions."""

from __future__ import annotations

import threading
from typing import Any, Callable, Dict, Hashable, Tuple, TypeVar

from cachetools import LRUCache

from ..logging import get_logger

T = TypeVar("T")


class ParseCache:
    """
    Memoizes parser results keyed by ``(kind, text)``.

    Parse failures are not cached; the parser raises again on the next call.
    """

    def __init__(self, max_size: int = 256) -> None:
        """Initialize the cache; ``max_size=0`` disables it."""
        self.max_size = max_size
        self._cache: LRUCache[Tuple[str, Hashable], Any] = LRUCache(maxsize=max(max_size, 1))
        self._lock = threading.Lock()
        self._hits = 0
        self._misses = 0
        self._logger = get_logger(__name__)

    def get_or_parse(self, kind: str, text: str, parse: Callable[[str], T]) -> T:
        if self.max_size == 0:
            return parse(text)
        key = (kind, " ".join(text.split()))
        with self._lock:
            if key in self._cache:
                self._hits += 1
                self._logger.cache_hit(f"{kind}:{key[1]}")
                return self._cache[key]  # type: ignore[no-any-return]
        self._misses += 1
        self._logger.cache_miss(f"{kind}:{key[1]}")
        value = parse(text)
        with self._lock:
            self._cache[key] = value
        return value

    def clear(self) -> None:
        with self._lock:
            self._cache.clear()
            self._hits = 0
            self._misses = 0

    def __len__(self) -> int:
        return len(self._cache)

    def get_statistics(self) -> Dict[str, Any]:
        """Get cache statistics."""
        total_requests = self._hits + self._misses
        hit_rate = (self._hits / total_requests * 100) if total_requests > 0 else 0
        return {
            "size": len(self._cache),
            "max_size": self.max_size,
            "hits": self._hits,
            "misses": self._misses,
            "hit_rate": round(hit_rate, 2),
        }
