"""Isomorph-free exhaustive enumeration of small graphs.

Graphs of order N are generated levelwise: every isomorphism class on
i vertices is extended by one new vertex with every attachment
neighborhood (one representative per orbit of the parent's twin
classes), and the children are deduplicated by canonical key.  A
minimum-degree target is pushed into generation: a partial graph in
which some vertex can no longer reach the target degree even if every
remaining vertex becomes its neighbor is discarded.

Completed levels are cached per process, keyed by (order, min_deg), so
repeated sweeps over the same orders are cheap.
"""

from __future__ import annotations

from itertools import product
from typing import Iterator

from .canon import canonical_rows, pack_rows, twin_classes, unpack_key
from .graphs import Graph

DEFAULT_CEILING = 10

_CACHE: dict[tuple[int, int], tuple[int, ...]] = {}


class EnumerationCeilingError(ValueError):
    """Refusal to enumerate above the configured order ceiling."""


def enumerate_graphs(
    order: int,
    min_deg: int = 0,
    *,
    ceiling: int = DEFAULT_CEILING,
    allow_above_ceiling: bool = False,
) -> Iterator[Graph]:
    """Yield one canonical representative per isomorphism class.

    Classes are streamed in ascending canonical-key order, so the
    stream is deterministic.  Orders above the ceiling are refused
    unless allow_above_ceiling is set.
    """
    if order < 0:
        raise ValueError(f"order must be nonnegative, got {order}")
    if order > ceiling and not allow_above_ceiling:
        raise EnumerationCeilingError(
            f"order {order} exceeds the enumeration ceiling {ceiling}; "
            f"pass allow_above_ceiling=True (CLI: --allow-above-ceiling or "
            f"CSR_ENUM_CEILING) to override"
        )
    for key in enumerate_keys(order, min_deg):
        yield Graph(order, unpack_key(key, order))


def count_graphs(order: int, min_deg: int = 0, **kw) -> int:
    if order > kw.get("ceiling", DEFAULT_CEILING) and not kw.get("allow_above_ceiling"):
        raise EnumerationCeilingError(f"order {order} exceeds the enumeration ceiling")
    return len(enumerate_keys(order, min_deg))


def enumerate_keys(order: int, min_deg: int = 0) -> tuple[int, ...]:
    """Sorted canonical keys of all classes with the given order and
    minimum degree.  No ceiling check; internal workhorse."""
    if min_deg < 0:
        min_deg = 0
    if min_deg > max(order - 1, 0):
        return ()
    cached = _CACHE.get((order, min_deg))
    if cached is not None:
        return cached
    if order == 0:
        result: tuple[int, ...] = (0,)
        _CACHE[(order, min_deg)] = result
        return result

    # threshold at level i: every vertex needs degree >= min_deg - (order - i)
    level: set[int] = {0}  # canonical keys at current level, starting at K1
    for i in range(1, order):
        target = i + 1
        thresh = min_deg - (order - target)
        full_cached = _CACHE.get((target, 0)) if thresh <= 0 else None
        if full_cached is not None:
            level = set(full_cached)
            continue
        nxt: set[int] = set()
        for key in level:
            rows = list(unpack_key(key, i))
            _extend(rows, i, thresh, nxt)
        level = nxt
        if thresh <= 0:
            _CACHE[(target, 0)] = tuple(sorted(level))
    result = tuple(sorted(level))
    _CACHE[(order, min_deg)] = result
    return result


def _extend(rows: list[int], i: int, thresh: int, sink: set[int]) -> None:
    """Add vertex i to the parent with every twin-reduced neighborhood."""
    classes = twin_classes(rows, i) if i > 1 else [[0]]
    classes.sort(key=lambda c: c[0])
    class_masks = []
    for cls in classes:
        cls.sort()
        masks = [0]
        m = 0
        for v in cls:
            m |= 1 << v
            masks.append(m)
        class_masks.append(masks)
    degs = [rows[v].bit_count() for v in range(i)]
    need = max(thresh, 0)
    # vertices that must gain the new neighbor to stay completable
    forced = 0
    for v in range(i):
        if degs[v] < thresh:
            if degs[v] < thresh - 1:
                return  # parent cannot be completed at all
            forced |= 1 << v
    for counts in product(*(range(len(m)) for m in class_masks)):
        size = sum(counts)
        if size < need:
            continue
        s_mask = 0
        for masks, c in zip(class_masks, counts):
            s_mask |= masks[c]
        if forced & ~s_mask:
            continue
        child = rows + [s_mask]
        for v in range(i):
            if s_mask >> v & 1:
                child[v] = rows[v] | (1 << i)
        sink.add(pack_rows(canonical_rows(child, i + 1), i + 1))
