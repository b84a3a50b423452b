"""Canonical labeling for small graphs.

canonical_key(g) is a complete isomorphism invariant: two graphs give
the same key iff they are isomorphic.  The key is the packed
upper-triangle bit string of a canonically relabeled copy, so the
canonical representative can be reconstructed from the key alone.

The labeling maximizes the packed bit string over an
isomorphism-invariant backtracking discipline: connected components
are handled separately, vertices are pre-partitioned by iterated
degree refinement, branches explore one representative per twin class
(twin swaps are automorphisms), and partial strings are pruned against
the best completed string.  Practical up to roughly 12 vertices, which
covers the enumeration ceiling with room to spare.
"""

from __future__ import annotations

from .graphs import Graph, _bits


def canonical_key(g: Graph) -> int:
    return pack_rows(canonical_rows(g._rows, g.order), g.order)


def canonical_graph(g: Graph) -> Graph:
    return Graph(g.order, canonical_rows(g._rows, g.order))


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.order != g2.order or g1.edge_count() != g2.edge_count():
        return False
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    return canonical_key(g1) == canonical_key(g2)


def pack_rows(rows: tuple[int, ...], n: int) -> int:
    """Column-major upper-triangle bits as a single int (graph6 bit order)."""
    key = 0
    for v in range(1, n):
        row = rows[v]
        for u in range(v):
            key = key << 1 | (row >> u & 1)
    return key


def unpack_key(key: int, n: int) -> tuple[int, ...]:
    rows = [0] * n
    nbits = n * (n - 1) // 2
    for v in range(n - 1, 0, -1):
        for u in range(v - 1, -1, -1):
            if key & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            key >>= 1
    assert key == 0 or nbits == 0
    return tuple(rows)


def canonical_rows(rows: tuple[int, ...] | list[int], n: int) -> tuple[int, ...]:
    if n <= 1:
        return tuple([0] * n)
    comps = _components(rows, n)
    if len(comps) == 1:
        return _canon_connected(list(rows), n)
    blocks = []
    for mask in comps:
        verts = list(_bits(mask))
        k = len(verts)
        index = {v: i for i, v in enumerate(verts)}
        sub = [0] * k
        for v in verts:
            i = index[v]
            m = rows[v] & mask
            for u in _bits(m):
                sub[i] |= 1 << index[u]
        crows = _canon_connected(sub, k) if k > 1 else (0,)
        blocks.append((k, pack_rows(crows, k), crows))
    blocks.sort(key=lambda b: (b[0], b[1]), reverse=True)
    out = []
    off = 0
    for k, _, crows in blocks:
        out.extend(r << off for r in crows)
        off += k
    return tuple(out)


def _components(rows, n) -> list[int]:
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


def twin_classes(rows, n) -> list[list[int]]:
    """Partition vertices into classes closed under twin transpositions.

    u,v are open twins when N(u)=N(v), closed twins when
    N[u]=N[v]; either swap is an automorphism fixing all other
    vertices, so any permutation within a class extends to an
    automorphism.
    """
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u in range(n):
        ru = rows[u]
        cu = ru | 1 << u
        for v in range(u + 1, n):
            if ru == rows[v] or cu == (rows[v] | 1 << v):
                a, b = find(u), find(v)
                if a != b:
                    parent[b] = a
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(find(v), []).append(v)
    return list(groups.values())


def _refine(rows, n, colors):
    """Iterated neighborhood refinement to a stable coloring.

    Color ids are ranks of (old color, sorted neighbor-color counts),
    hence isomorphism-invariant.
    """
    while True:
        sigs = []
        for v in range(n):
            cnt: dict[int, int] = {}
            for u in _bits(rows[v]):
                c = colors[u]
                cnt[c] = cnt.get(c, 0) + 1
            sigs.append((colors[v], tuple(sorted(cnt.items()))))
        ranking = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranking[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


def _canon_connected(rows: list[int], n: int) -> tuple[int, ...]:
    # Initial colors: degree descending, so dense vertices lead and the
    # first completed labeling is usually already maximal.
    degs = [rows[v].bit_count() for v in range(n)]
    order_of = {d: i for i, d in enumerate(sorted(set(degs), reverse=True))}
    colors = _refine(rows, n, [order_of[d] for d in degs])

    twin_of = [0] * n
    for cid, cls in enumerate(twin_classes(rows, n)):
        for v in cls:
            twin_of[v] = cid

    cells: list[list[int]] = []
    by_color: dict[int, list[int]] = {}
    for v in range(n):
        by_color.setdefault(colors[v], []).append(v)
    for c in sorted(by_color):
        cells.append(by_color[c])

    best: list[list[int] | None] = [None]
    gen = [0]
    path = [0] * n

    def recurse(cells, profiles, depth, tight):
        while cells and len(cells[0]) == 1:
            v = cells[0][0]
            chunk = profiles[v]
            if tight:
                b = best[0][depth]
                if chunk < b:
                    return
                if chunk > b:
                    tight = False
            path[depth] = chunk
            row = rows[v]
            rest = []
            for cell in cells[1:]:
                adj = [u for u in cell if row >> u & 1]
                non = [u for u in cell if not row >> u & 1]
                if adj:
                    rest.append(adj)
                if non:
                    rest.append(non)
            for cell in rest:
                for u in cell:
                    profiles[u] = profiles[u] << 1 | (row >> u & 1)
            cells = rest
            depth += 1
        if not cells:
            if not tight:
                best[0] = path[:depth]
                gen[0] += 1
            return
        cell = cells[0]
        seen_twins = set()
        cands = []
        for v in cell:
            t = twin_of[v]
            if t not in seen_twins:
                seen_twins.add(t)
                cands.append(v)
        cands.sort(key=lambda v: -profiles[v])
        for v in cands:
            chunk = profiles[v]
            if tight:
                b = best[0][depth]
                if chunk < b:
                    break
                child_tight = chunk == b
            else:
                child_tight = False
            g_before = gen[0]
            row = rows[v]
            new_cells = []
            first_rest = [u for u in cell if u != v]
            trailing = [first_rest] + list(cells[1:]) if first_rest else list(cells[1:])
            for c in trailing:
                adj = [u for u in c if row >> u & 1]
                non = [u for u in c if not row >> u & 1]
                if adj:
                    new_cells.append(adj)
                if non:
                    new_cells.append(non)
            new_profiles = profiles.copy()
            for c in new_cells:
                for u in c:
                    new_profiles[u] = new_profiles[u] << 1 | (row >> u & 1)
            path[depth] = chunk
            recurse(new_cells, new_profiles, depth + 1, child_tight)
            if gen[0] != g_before:
                tight = True

    recurse(cells, [0] * n, 0, False)
    chunks = best[0]
    out = [0] * n
    for p in range(1, n):
        c = chunks[p]
        for j in range(p):
            if c >> (p - 1 - j) & 1:
                out[p] |= 1 << j
                out[j] |= 1 << p
    return tuple(out)
