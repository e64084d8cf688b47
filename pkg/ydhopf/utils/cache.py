"""
Build caching for ydhopf.

Constructions such as the second construction are expensive to build and are
reused across verification suites, so built objects are memoized by a
canonical recipe key.
"""

from typing import Any, Callable, Dict, Hashable, TypeVar

from loguru import logger

T = TypeVar("T")


class BuildCache:
    """In-memory cache for built structures."""

    def __init__(self, max_size: int = 64):
        self._cache: Dict[Hashable, Any] = {}
        self._max_size = max_size
        self._access_count: Dict[Hashable, int] = {}
        self._cache_hits = 0
        self._cache_misses = 0

    def get_or_build(self, key: Hashable, builder: Callable[[], T]) -> T:
        """Get a structure from cache or build and cache it."""
        if key in self._cache:
            self._access_count[key] += 1
            self._cache_hits += 1
            return self._cache[key]

        self._cache_misses += 1
        value = builder()

        self._cache[key] = value
        self._access_count[key] = 1

        if len(self._cache) > self._max_size:
            self._evict_least_used()

        return value

    def _evict_least_used(self) -> None:
        """Remove the least-used entry when the cache is full."""
        if len(self._cache) > self._max_size:
            least_used = min(self._access_count.items(), key=lambda x: x[1])
            del self._cache[least_used[0]]
            del self._access_count[least_used[0]]
            logger.debug(f"Evicted {least_used[0]} from build cache")

    def invalidate(self, key: Hashable) -> None:
        """Remove a specific entry from cache."""
        if key in self._cache:
            del self._cache[key]
            del self._access_count[key]
            logger.debug(f"Invalidated {key} from build cache")

    def clear_cache(self) -> None:
        """Clear entire cache."""
        self._cache.clear()
        self._access_count.clear()
        logger.debug("Cleared build cache")

    def get_stats(self) -> Dict[str, Any]:
        """Get cache performance statistics."""
        total = self._cache_hits + self._cache_misses
        return {
            "cache_size": len(self._cache),
            "max_size": self._max_size,
            "cache_hits": self._cache_hits,
            "cache_misses": self._cache_misses,
            "hit_rate": self._cache_hits / total if total > 0 else 0,
        }


# Global cache instance
build_cache = BuildCache()
