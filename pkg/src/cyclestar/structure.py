"""Structural decompositions: blocks, closure, 2-connected peeling.

The peeling procedure repeatedly deletes a cut vertex until every
component of what remains is 2-connected; under the degree hypothesis
min_degree >= order/k + k it removes fewer than k-1 vertices and
leaves fewer than k components.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, _bits, mask_to_vertices


class DecompositionError(RuntimeError):
    """The peeling procedure ended with a component that is not
    2-connected; with the degree hypothesis this indicates a bug."""


class HypothesisError(ValueError):
    """Degree hypothesis of the peeling procedure not satisfied."""


@dataclass(frozen=True)
class BlockTree:
    """Maximal 2-connected subgraphs and bridges, plus cut vertices.

    Every edge lies in exactly one block; two blocks share at most one
    vertex, which is then a cut vertex.  Isolated vertices form no
    block.
    """

    blocks: tuple[tuple[int, ...], ...]
    cut_vertices: frozenset[int]


@dataclass(frozen=True)
class Decomposition:
    """Output of the peeling procedure: removed vertices and the
    vertex sets of the 2-connected components of what remains."""

    removed: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]
    hypothesis_checked: bool = True

    @property
    def s(self) -> int:
        return len(self.components)

    def to_json(self) -> dict:
        return {
            "removed": list(self.removed),
            "components": [list(c) for c in self.components],
            "s": self.s,
            "hypothesis_checked": self.hypothesis_checked,
        }


def blocks(g: Graph) -> BlockTree:
    """Standard block decomposition by iterative depth-first search."""
    n = g.order
    rows = g._rows
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    time = 0
    out: list[tuple[int, ...]] = []
    cuts: set[int] = set()
    for root in range(n):
        if disc[root] != -1:
            continue
        if rows[root] == 0:
            disc[root] = time
            time += 1
            continue
        disc[root] = low[root] = time
        time += 1
        stack = [(root, iter(_bits(rows[root])))]
        estack: list[tuple[int, int]] = []
        root_children = 0
        while stack:
            v, it = stack[-1]
            descended = False
            for u in it:
                if u == parent[v]:
                    continue
                if disc[u] == -1:
                    parent[u] = v
                    estack.append((v, u))
                    disc[u] = low[u] = time
                    time += 1
                    stack.append((u, iter(_bits(rows[u]))))
                    descended = True
                    break
                if disc[u] < disc[v]:
                    estack.append((v, u))
                    if disc[u] < low[v]:
                        low[v] = disc[u]
            if descended:
                continue
            stack.pop()
            if stack:
                p = stack[-1][0]
                if low[v] < low[p]:
                    low[p] = low[v]
                if low[v] >= disc[p]:
                    members: set[int] = set()
                    while True:
                        e = estack.pop()
                        members.add(e[0])
                        members.add(e[1])
                        if e == (p, v):
                            break
                    out.append(tuple(sorted(members)))
                    if p == root:
                        root_children += 1
                    else:
                        cuts.add(p)
        if root_children > 1:
            cuts.add(root)
    out.sort()
    return BlockTree(tuple(out), frozenset(cuts))


def cut_vertices(g: Graph) -> frozenset[int]:
    return blocks(g).cut_vertices


def is_2connected(g: Graph) -> bool:
    """Order >= 3, connected, and no cut vertex.  K2 and K1 are not
    2-connected by this convention."""
    return g.order >= 3 and g.is_connected() and not cut_vertices(g)


def bc_closure(g: Graph) -> Graph:
    """Join non-adjacent pairs with degree sum >= order until none
    remain.  The result is independent of the join order."""
    n = g.order
    rows = list(g._rows)
    degs = [r.bit_count() for r in rows]
    pending = [(u, v) for u in range(n) for v in range(u + 1, n) if not rows[u] >> v & 1]
    while pending:
        u, v = pending.pop()
        if rows[u] >> v & 1:
            continue
        if degs[u] + degs[v] < n:
            continue
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        degs[u] += 1
        degs[v] += 1
        for w in (u, v):
            full = (1 << n) - 1
            for x in _bits(full & ~rows[w] & ~(1 << w)):
                pending.append((w, x))
    return Graph(n, tuple(rows))


def decompose_2connected(g: Graph, k: int, *, unchecked: bool = False) -> Decomposition:
    """Peel cut vertices until every remaining component is 2-connected.

    Requires order >= k >= 2 and min_degree >= order/k + k unless
    unchecked is set; the deterministic peeling rule takes the
    lowest-index cut vertex in the component containing the lowest
    remaining vertex index.
    """
    n = g.order
    hypothesis = k >= 2 and n >= k and k * (g.min_degree() - k) >= n
    if not hypothesis and not unchecked:
        raise HypothesisError(
            f"need order >= k >= 2 and min_degree >= order/k + k "
            f"(order={n}, k={k}, min_degree={g.min_degree()})"
        )
    removed: list[int] = []
    remaining = list(range(n))
    while True:
        h = g.induced_subgraph(remaining)
        comp_masks = h.component_masks()
        peeled = False
        all_2conn = True
        for mask in comp_masks:
            local = mask_to_vertices(mask)
            comp = h.induced_subgraph(local)
            if comp.order < 3:
                all_2conn = False
                continue
            cuts = cut_vertices(comp)
            if cuts:
                all_2conn = False
                local_cut = min(cuts)
                removed.append(remaining[local[local_cut]])
                peeled = True
                break
        if peeled:
            remaining = [v for v in range(n) if v not in removed]
            continue
        if not all_2conn:
            raise DecompositionError(
                "peeling ended with a component of order < 3; "
                "the degree hypothesis excludes this"
            )
        components = tuple(
            tuple(remaining[i] for i in mask_to_vertices(mask)) for mask in comp_masks
        )
        break
    dec = Decomposition(tuple(sorted(removed)), components, hypothesis_checked=hypothesis)
    s = dec.s
    if len(removed) > s - 1:
        raise DecompositionError(f"removed {len(removed)} vertices but only {s} components")
    if hypothesis and s >= k:
        raise DecompositionError(f"hypothesis held but produced s={s} >= k={k}")
    return dec


def attach_low_degree_hubs(
    g: Graph, dec: Decomposition, threshold: int
) -> list[tuple[int, ...]]:
    """Augment each component with the removed vertices sending at
    least `threshold` edges into it.  Diagnostic for checking the
    cover conditions of the set-system bound on real graphs."""
    out = []
    for comp in dec.components:
        comp_set = set(comp)
        extra = [
            u
            for u in dec.removed
            if sum(1 for w in g.neighbors(u) if w in comp_set) >= threshold
        ]
        out.append(tuple(sorted(set(comp) | set(extra))))
    return out
