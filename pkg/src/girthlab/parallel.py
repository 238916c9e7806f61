"""Worker-count resolution and order-preserving parallel mapping.

GIRTHLAB_THREADS caps the worker count (0 or unset means auto).  Every
parallel code path in this package is written so results are identical to
sequential execution; threads only change wall-clock time.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, Sequence, TypeVar

T = TypeVar("T")
U = TypeVar("U")

__all__ = ["resolve_workers", "ordered_map"]


def resolve_workers(workers: int | None = None) -> int:
    if workers is None:
        raw = os.environ.get("GIRTHLAB_THREADS", "0")
        try:
            workers = int(raw)
        except ValueError:
            raise ValueError(f"GIRTHLAB_THREADS must be an integer, got {raw!r}") from None
    if workers < 0:
        raise ValueError(f"worker count must be >= 0, got {workers}")
    if workers == 0:
        workers = min(os.cpu_count() or 1, 8)
    return workers


def ordered_map(fn: Callable[[T], U], items: Sequence[T], workers: int) -> list[U]:
    """Map preserving item order in the result regardless of scheduling."""
    if workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
