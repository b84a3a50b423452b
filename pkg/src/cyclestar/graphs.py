"""Immutable simple graphs on dense integer vertices.

Adjacency is stored as one bitmask per vertex, which keeps degree,
complement, and induced-subgraph operations bit-parallel.  All
operations return new graphs; a Graph value is never mutated after
construction, so graphs can be shared freely across workers.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence


class GraphBuildError(ValueError):
    """Raised for out-of-range endpoints or loops in an edge list."""


class Graph:
    """Undirected simple graph with vertices 0..order-1."""

    __slots__ = ("order", "_rows")

    def __init__(self, order: int, rows: tuple[int, ...]):
        # Internal constructor: rows must already be symmetric and
        # irreflexive.  Use build() to construct from an edge list.
        self.order = order
        self._rows = rows

    # -- construction -------------------------------------------------

    @staticmethod
    def _from_rows(order: int, rows: tuple[int, ...]) -> "Graph":
        return Graph(order, rows)

    def __reduce__(self):
        return (Graph._from_rows, (self.order, self._rows))

    # -- basic accessors ----------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._rows[u] >> v & 1)

    def neighbors(self, v: int) -> Iterator[int]:
        return _bits(self._rows[v])

    def neighbor_mask(self, v: int) -> int:
        return self._rows[v]

    def degree(self, v: int) -> int:
        if not 0 <= v < self.order:
            raise IndexError(f"vertex {v} out of range for order {self.order}")
        return self._rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self._rows]

    def min_degree(self) -> int:
        if self.order == 0:
            return 0
        return min(r.bit_count() for r in self._rows)

    def max_degree(self) -> int:
        if self.order == 0:
            return 0
        return max(r.bit_count() for r in self._rows)

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self._rows) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.order):
            for v in _bits(self._rows[u] >> (u + 1)):
                yield (u, u + 1 + v)

    # -- derived graphs -----------------------------------------------

    def complement(self) -> "Graph":
        n = self.order
        full = (1 << n) - 1
        rows = tuple((full ^ self._rows[v]) & ~(1 << v) for v in range(n))
        return Graph(n, rows)

    def induced_subgraph(self, vertices: Iterable[int]) -> "Graph":
        """Subgraph on the given vertices, relabeled 0..k-1 in ascending
        original order."""
        vs = sorted(set(vertices))
        for v in vs:
            if not 0 <= v < self.order:
                raise GraphBuildError(f"vertex {v} out of range for order {self.order}")
        index = {v: i for i, v in enumerate(vs)}
        rows = [0] * len(vs)
        for v in vs:
            i = index[v]
            for u in _bits(self._rows[v]):
                j = index.get(u)
                if j is not None:
                    rows[i] |= 1 << j
        return Graph(len(vs), tuple(rows))

    def disjoint_union(self, other: "Graph") -> "Graph":
        """Union with the second graph's vertices shifted by self.order."""
        off = self.order
        rows = self._rows + tuple(r << off for r in other._rows)
        return Graph(off + other.order, rows)

    def is_connected(self) -> bool:
        n = self.order
        if n <= 1:
            return True
        rows = self._rows
        seen = 1
        frontier = 1
        while frontier:
            reach = 0
            for v in _bits(frontier):
                reach |= rows[v]
            frontier = reach & ~seen
            seen |= frontier
        return seen == (1 << n) - 1

    def component_masks(self) -> list[int]:
        """Vertex bitmasks of the connected components, by least vertex."""
        n = self.order
        rows = self._rows
        remaining = (1 << n) - 1
        comps = []
        while remaining:
            start = remaining & -remaining
            seen = start
            frontier = start
            while frontier:
                reach = 0
                for v in _bits(frontier):
                    reach |= rows[v]
                frontier = reach & remaining & ~seen
                seen |= frontier
            comps.append(seen)
            remaining &= ~seen
        return comps

    # -- value semantics ----------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.order == other.order and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self.order, self._rows))

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, edges={self.edge_count()})"


def build(order: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list.

    Edges are deduplicated and order-insensitive.  Loops and
    out-of-range endpoints raise GraphBuildError.
    """
    if order < 0:
        raise GraphBuildError(f"order must be nonnegative, got {order}")
    rows = [0] * order
    for u, v in edges:
        if u == v:
            raise GraphBuildError(f"loop at vertex {u}")
        if not (0 <= u < order and 0 <= v < order):
            raise GraphBuildError(f"edge ({u},{v}) out of range for order {order}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(order, tuple(rows))


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphBuildError(f"cycle needs at least 3 vertices, got {n}")
    return build(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return build(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return build(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    return g1.disjoint_union(g2)


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_to_vertices(mask: int) -> list[int]:
    return list(_bits(mask))


def vertices_to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m
