"""Optional thread fan-out, controlled by the EULERLAB_THREADS variable.

Results always come back in input order, so any fold over them is
deterministic regardless of scheduling.  The heavy code here is pure
Python, so threads cap concurrency rather than buy speed; the knob
exists so batch callers can bound resource use and so the determinism
contract is testable.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, Sequence, TypeVar

A = TypeVar("A")
B = TypeVar("B")


def thread_count() -> int:
    raw = os.environ.get("EULERLAB_THREADS", "1")
    try:
        n = int(raw)
    except ValueError:
        raise ValueError(f"EULERLAB_THREADS must be an integer, got {raw!r}")
    return max(1, n)


def pmap(fn: Callable[[A], B], items: Iterable[A]) -> list[B]:
    """Map preserving order, threaded when EULERLAB_THREADS > 1."""
    seq: Sequence[A] = list(items)
    n = thread_count()
    if n <= 1 or len(seq) <= 1:
        return [fn(item) for item in seq]
    with ThreadPoolExecutor(max_workers=min(n, len(seq))) as pool:
        return list(pool.map(fn, seq))
