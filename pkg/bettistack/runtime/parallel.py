"""
Process-pool fan-out for CPU-bound exact arithmetic.

Functions passed to ``parallel_map`` must be module-level so they pickle.
Results always come back in input order.
"""

from __future__ import annotations

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, List, Optional, Sequence, TypeVar

from bettistack.core.errors import InvalidParameter

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")

DEFAULT_THRESHOLD = 64


def resolve_workers(requested: Optional[int]) -> int:
    """
    Turn a requested worker count into a positive integer.

    ``None`` means every available core.
    """
    if requested is None:
        return max(1, os.cpu_count() or 1)
    if requested < 1:
        raise InvalidParameter(f"worker count must be positive, got {requested}")
    return requested


def parallel_map(
    fn: Callable[[T], R],
    items: Sequence[T],
    workers: Optional[int] = 1,
    threshold: int = DEFAULT_THRESHOLD,
) -> List[R]:
    """
    Map ``fn`` over ``items``, in a process pool when it is worth it.

    Runs serially with a single worker or when there are fewer than
    ``threshold`` items.
    """
    count = resolve_workers(workers)
    if count == 1 or not items or len(items) < threshold:
        return [fn(item) for item in items]
    count = min(count, len(items))
    chunksize = max(1, len(items) // (count * 4))
    logger.debug("fanning %d items over %d processes (chunksize=%d)", len(items), count, chunksize)
    with ProcessPoolExecutor(max_workers=count) as pool:
        return list(pool.map(fn, items, chunksize=chunksize))
