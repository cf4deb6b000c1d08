"""Internal parallelism, capped by the HEEGAARD_LAB_THREADS variable.

All engine results are schedule-independent: parallel maps preserve input
order, and every consumer sorts its outputs anyway.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor


def thread_cap() -> int:
    raw = os.environ.get("HEEGAARD_LAB_THREADS", "1")
    try:
        n = int(raw)
    except ValueError:
        raise ValueError(f"HEEGAARD_LAB_THREADS must be an integer, got {raw!r}")
    return max(1, n)


def pmap(fn, items):
    """Order-preserving map, threaded when the cap allows it."""
    items = list(items)
    n = thread_cap()
    if n <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items))
