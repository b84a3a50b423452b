"""Deterministic parallel scanning.

Results are yielded in input order whatever the worker count, so any
decision taken on the first qualifying element is reproducible.
"""

from __future__ import annotations

import multiprocessing as mp
from typing import Callable, Iterable, Iterator, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def scan_ordered(
    fn: Callable[[T], R], items: Iterable[T], workers: int, chunksize: int = 16
) -> Iterator[R]:
    if workers <= 1:
        for item in items:
            yield fn(item)
        return
    with mp.Pool(workers) as pool:
        yield from pool.imap(fn, items, chunksize)
