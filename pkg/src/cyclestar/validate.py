"""Independent re-checking of witnesses and decompositions.

Deliberately dumb: every check goes back to the adjacency relation of
the graph and never reuses search code, so a passing validation is
evidence independent of the machinery that produced the certificate.
"""

from __future__ import annotations

from .graphs import Graph
from .structure import Decomposition
from .witnesses import CycleWitness, PathWitness, StarWitness


def validate_cycle_witness(
    g: Graph, w: CycleWitness, expected_length: int | None = None
) -> bool:
    vs = w.vertices
    if len(vs) < 3 or len(set(vs)) != len(vs):
        return False
    if any(not 0 <= v < g.order for v in vs):
        return False
    if expected_length is not None and len(vs) != expected_length:
        return False
    return all(g.has_edge(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs)))


def validate_path_witness(
    g: Graph,
    w: PathWitness,
    start: int | None = None,
    end: int | None = None,
    expected_length: int | None = None,
) -> bool:
    vs = w.vertices
    if len(vs) < 2 or len(set(vs)) != len(vs):
        return False
    if any(not 0 <= v < g.order for v in vs):
        return False
    if start is not None and vs[0] != start:
        return False
    if end is not None and vs[-1] != end:
        return False
    if expected_length is not None and len(vs) - 1 != expected_length:
        return False
    return all(g.has_edge(vs[i], vs[i + 1]) for i in range(len(vs) - 1))


def validate_star_witness(g: Graph, w: StarWitness, n: int) -> bool:
    """The center together with its leaves must form a star of the
    complement: n distinct non-neighbors of the center."""
    if not 0 <= w.center < g.order:
        return False
    leaves = set(w.leaves)
    if len(leaves) != len(w.leaves) or len(leaves) != n:
        return False
    for v in leaves:
        if not 0 <= v < g.order or v == w.center or g.has_edge(w.center, v):
            return False
    return True


def validate_decomposition(g: Graph, dec: Decomposition) -> bool:
    """Re-check all structural invariants of a peeling result."""
    seen: set[int] = set()
    parts = [dec.removed, *dec.components]
    for part in parts:
        for v in part:
            if not 0 <= v < g.order or v in seen:
                return False
            seen.add(v)
    if len(seen) != g.order:
        return False
    if len(dec.removed) > dec.s - 1:
        return False
    for comp in dec.components:
        sub = g.induced_subgraph(comp)
        if sub.order < 3 or not sub.is_connected():
            return False
        # no cut vertex, by deletion
        base = _component_count(sub)
        for v in range(sub.order):
            rest = [u for u in range(sub.order) if u != v]
            if _component_count(sub.induced_subgraph(rest)) > base:
                return False
        # components must be pairwise non-adjacent in g - removed
        comp_set = set(comp)
        for other in dec.components:
            if other is comp:
                continue
            for u in comp_set:
                for w in g.neighbors(u):
                    if w in other:
                        return False
    return True


def _component_count(g: Graph) -> int:
    return len(g.component_masks())
