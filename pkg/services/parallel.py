"""Order-preserving fan-out of pure work items over a process pool."""

from __future__ import annotations

import logging
from collections.abc import Callable, Sequence
from multiprocessing import Pool
from typing import TypeVar

from config import config

logger = logging.getLogger("regtool.parallel")

T = TypeVar("T")
R = TypeVar("R")


def resolve_workers(workers: int | None) -> int:
    """Explicit *workers* wins, else ``REGTOOL_THREADS``; never below one."""
    return max(1, workers if workers is not None else config.runtime.threads)


def map_in_pool(func: Callable[[T], R], items: Sequence[T], workers: int | None = None) -> list[R]:
    """``[func(item) for item in items]``, spread over worker processes when allowed.

    *func* must be a module-level function so it can be pickled. Results keep
    the input order, so output is identical with or without a pool.
    """
    count = resolve_workers(workers)
    if count > 1 and len(items) > 1:
        processes = min(count, len(items))
        logger.debug("Mapping %d items over %d processes", len(items), processes)
        with Pool(processes=processes) as pool:
            return pool.map(func, items)
    return [func(item) for item in items]
