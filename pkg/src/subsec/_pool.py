"""Ordered fan-out of per-graph work to a process pool.

SUBSEC_THREADS caps the worker count (default: machine parallelism). Results
always come back in input order, so reports are byte-identical no matter how
many workers ran.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor


def worker_count() -> int:
    env = os.environ.get("SUBSEC_THREADS")
    if env is not None:
        try:
            return max(1, int(env))
        except ValueError:
            raise ValueError(f"SUBSEC_THREADS={env!r} is not an integer") from None
    return os.cpu_count() or 1


def ordered_map(fn, items, workers: int | None = None) -> list:
    items = list(items)
    if workers is None:
        workers = worker_count()
    if workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ProcessPoolExecutor(max_workers=min(workers, len(items))) as pool:
        return list(pool.map(fn, items))
