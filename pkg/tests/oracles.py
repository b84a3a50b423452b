"""Naive reference implementations used as independent oracles.

Everything here is deliberately brute force: subsets, permutations,
and vertex deletion.  Nothing imports the search or canonical-form
machinery it is used to check.
"""

from __future__ import annotations

import itertools

from cyclestar.graphs import Graph, build


def naive_cycle_exists(g: Graph, k: int) -> bool:
    """Enumerate k-subsets and cyclic orders."""
    n = g.order
    if k > n:
        return False
    for sub in itertools.combinations(range(n), k):
        first = sub[0]
        for perm in itertools.permutations(sub[1:]):
            if perm[0] > perm[-1]:
                continue  # one direction per cyclic order
            seq = (first,) + perm
            if all(g.has_edge(seq[i], seq[(i + 1) % k]) for i in range(k)):
                return True
    return False


def naive_path_exists(g: Graph, v: int, w: int, k: int) -> bool:
    others = [x for x in range(g.order) if x not in (v, w)]
    for mids in itertools.permutations(others, k - 1):
        seq = (v,) + mids + (w,)
        if all(g.has_edge(seq[i], seq[i + 1]) for i in range(k)):
            return True
    return False


def naive_even_spectrum(g: Graph) -> set[int]:
    return {k for k in range(4, g.order + 1, 2) if naive_cycle_exists(g, k)}


def naive_component_count(g: Graph) -> int:
    seen: set[int] = set()
    count = 0
    for start in range(g.order):
        if start in seen:
            continue
        count += 1
        stack = [start]
        while stack:
            v = stack.pop()
            if v in seen:
                continue
            seen.add(v)
            stack.extend(g.neighbors(v))
    return count


def naive_cut_vertices(g: Graph) -> set[int]:
    """Delete each vertex and compare component counts."""
    base = naive_component_count(g)
    cuts = set()
    for v in range(g.order):
        h = g.induced_subgraph([u for u in range(g.order) if u != v])
        if naive_component_count(h) > base:
            cuts.add(v)
    return cuts


def naive_blocks(g: Graph) -> set[frozenset[int]]:
    """Maximal vertex sets of size >= 2 inducing connected subgraphs
    without cut vertices."""
    n = g.order
    candidates = []
    for size in range(2, n + 1):
        for sub in itertools.combinations(range(n), size):
            h = g.induced_subgraph(sub)
            if h.edge_count() == 0:
                continue
            if not h.is_connected():
                continue
            if any(
                naive_component_count(
                    h.induced_subgraph([u for u in range(h.order) if u != v])
                )
                > 1
                for v in range(h.order)
            ):
                continue
            candidates.append(frozenset(sub))
    return {
        c for c in candidates if not any(c < other for other in candidates)
    }


def naive_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.order != g2.order or g1.edge_count() != g2.edge_count():
        return False
    n = g1.order
    e2 = {frozenset(e) for e in g2.edges()}
    for perm in itertools.permutations(range(n)):
        if all(frozenset((perm[u], perm[v])) in e2 for u, v in g1.edges()):
            return True
    return False


def naive_enumerate_classes(order: int) -> list[Graph]:
    """All isomorphism classes by labeled enumeration and min-code
    deduplication.  Usable up to order 5 or so."""
    n = order
    nbits = n * (n - 1) // 2
    reps: dict[int, Graph] = {}
    pairs = [(u, v) for v in range(1, n) for u in range(v)]
    for bits in range(1 << nbits):
        edges = [pairs[i] for i in range(nbits) if bits >> i & 1]
        code = min(
            _edge_code(n, edges, perm) for perm in itertools.permutations(range(n))
        )
        if code not in reps:
            reps[code] = build(n, edges)
    return list(reps.values())


def _edge_code(n: int, edges, perm) -> int:
    code = 0
    for u, v in edges:
        a, b = perm[u], perm[v]
        if a > b:
            a, b = b, a
        code |= 1 << (b * (b - 1) // 2 + a)
    return code
