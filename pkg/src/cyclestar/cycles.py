"""Exact cycle and path search by pruned backtracking.

Every search is exhaustive: absence answers are proofs, and optional
node budgets fail loudly (BudgetExhausted) rather than degrade to a
wrong answer.  Witnesses are deterministic: the lexicographically
first cycle in anchor order is returned regardless of worker count.

A cycle lies inside a single block, so fixed-length cycle search
restricts each branch to the block of its first edge; this is what
makes freeness certification of clique-chain graphs instant.
"""

from __future__ import annotations

from .graphs import Graph, _bits
from .structure import blocks
from .witnesses import BudgetExhausted, CycleWitness, PathWitness


def find_cycle_of_length(
    g: Graph, k: int, *, max_nodes: int | None = None
) -> CycleWitness | None:
    """Exhaustive search for a cycle on exactly k vertices.

    Anchored at the minimum-index cycle vertex; the traversal
    direction is fixed by requiring the closing neighbor's index to
    exceed the first neighbor's.
    """
    if k < 3:
        raise ValueError(f"cycle length must be at least 3, got {k}")
    n = g.order
    if k > n:
        return None
    rows = g._rows
    big_blocks = [b for b in blocks(g).blocks if len(b) >= k]
    if not big_blocks:
        return None
    block_masks = []
    for b in big_blocks:
        m = 0
        for v in b:
            m |= 1 << v
        block_masks.append(m)
    counter = [0]
    for a in range(n):
        abit = 1 << a
        above = ~((abit << 1) - 1)
        for v1 in _bits(rows[a] & above):
            edge_bits = abit | (1 << v1)
            allowed = 0
            for m in block_masks:
                if m & edge_bits == edge_bits:
                    allowed = m & (above | abit)
                    break
            if allowed.bit_count() < k:
                continue
            closers = rows[a] & allowed & ~((1 << (v1 + 1)) - 1)
            if not closers:
                continue
            path = [a, v1]
            if _cycle_dfs(rows, a, allowed, abit | 1 << v1, v1, k - 2, closers, path,
                          counter, max_nodes):
                return CycleWitness(tuple(path))
    return None


def _cycle_dfs(rows, a, allowed, visited, u, steps_left, closers, path,
               counter, max_nodes) -> bool:
    counter[0] += 1
    if max_nodes is not None and counter[0] > max_nodes:
        raise BudgetExhausted(counter[0])
    if steps_left == 0:
        return bool(rows[u] >> a & 1) and bool(1 << u & closers)
    free = allowed & ~visited
    # the anchor must stay reachable through unvisited vertices in
    # steps_left+1 hops, and enough vertices must remain in range
    reach = 1 << u
    frontier = reach
    scope = (free | 1 << a) & ~(1 << u)
    for _ in range(steps_left + 1):
        nxt = 0
        for v in _bits(frontier):
            nxt |= rows[v]
        frontier = nxt & scope & ~reach
        if not frontier:
            break
        reach |= frontier
    if not reach >> a & 1 or (reach & free).bit_count() < steps_left:
        return False
    cands = rows[u] & free
    if steps_left == 1:
        cands &= closers
    for v in _bits(cands):
        path.append(v)
        if _cycle_dfs(rows, a, allowed, visited | 1 << v, v, steps_left - 1,
                      closers, path, counter, max_nodes):
            return True
        path.pop()
    return False


def find_cycle_of_length_at_least(
    g: Graph, k: int, *, max_nodes: int | None = None
) -> CycleWitness | None:
    """Exhaustive search for a cycle on at least k vertices.

    One backtracking pass that may close as soon as the path is long
    enough; cheaper than chaining exact-length absences when only a
    threshold matters.
    """
    if k < 3:
        raise ValueError(f"cycle length must be at least 3, got {k}")
    n = g.order
    if k > n:
        return None
    rows = g._rows
    big_blocks = [b for b in blocks(g).blocks if len(b) >= k]
    block_masks = []
    for b in big_blocks:
        m = 0
        for v in b:
            m |= 1 << v
        block_masks.append(m)
    if not block_masks:
        return None
    counter = [0]
    for a in range(n):
        abit = 1 << a
        above = ~((abit << 1) - 1)
        for v1 in _bits(rows[a] & above):
            edge_bits = abit | (1 << v1)
            allowed = 0
            for m in block_masks:
                if m & edge_bits == edge_bits:
                    allowed = m & (above | abit)
                    break
            if allowed.bit_count() < k:
                continue
            closers = rows[a] & allowed & ~((1 << (v1 + 1)) - 1)
            if not closers:
                continue
            path = [a, v1]
            if _long_cycle_dfs(rows, a, allowed, abit | 1 << v1, v1, k - 2, closers,
                               path, counter, max_nodes):
                return CycleWitness(tuple(path))
    return None


def _long_cycle_dfs(rows, a, allowed, visited, u, min_more, closers, path,
                    counter, max_nodes) -> bool:
    counter[0] += 1
    if max_nodes is not None and counter[0] > max_nodes:
        raise BudgetExhausted(counter[0])
    if min_more <= 0 and rows[u] >> a & 1 and 1 << u & closers:
        return True
    free = allowed & ~visited
    # anchor must remain reachable; enough free vertices must remain
    reach = 1 << u
    frontier = reach
    scope = (free | 1 << a) & ~(1 << u)
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= rows[v]
        frontier = nxt & scope & ~reach
        reach |= frontier
    if not reach >> a & 1 or (reach & free).bit_count() < min_more:
        return False
    for v in _bits(rows[u] & free):
        path.append(v)
        if _long_cycle_dfs(rows, a, allowed, visited | 1 << v, v, min_more - 1,
                           closers, path, counter, max_nodes):
            return True
        path.pop()
    return False


def even_cycle_spectrum(g: Graph, *, max_nodes: int | None = None) -> set[int]:
    """All even cycle lengths present, searched longest-first."""
    out = set()
    for k in range(g.order - (g.order & 1), 3, -2):
        if find_cycle_of_length(g, k, max_nodes=max_nodes) is not None:
            out.add(k)
    return out


def longest_even_cycle(g: Graph, *, max_nodes: int | None = None) -> int:
    """Length of the longest even cycle, 0 if there is none."""
    for k in range(g.order - (g.order & 1), 3, -2):
        if find_cycle_of_length(g, k, max_nodes=max_nodes) is not None:
            return k
    return 0


def is_hamiltonian(g: Graph, *, max_nodes: int | None = None) -> CycleWitness | None:
    if g.order < 3:
        raise ValueError(f"hamiltonicity needs order >= 3, got {g.order}")
    return find_cycle_of_length(g, g.order, max_nodes=max_nodes)


def is_pancyclic(g: Graph, *, max_nodes: int | None = None) -> bool:
    if g.order < 3:
        raise ValueError(f"pancyclicity needs order >= 3, got {g.order}")
    return all(
        find_cycle_of_length(g, k, max_nodes=max_nodes) is not None
        for k in range(3, g.order + 1)
    )


def find_path_of_length(
    g: Graph, v: int, w: int, k: int, *, max_nodes: int | None = None
) -> PathWitness | None:
    """Exhaustive search for a v-w path with exactly k edges."""
    if v == w:
        raise ValueError("path endpoints must differ")
    n = g.order
    if not (0 <= v < n and 0 <= w < n):
        raise ValueError(f"endpoints ({v},{w}) out of range for order {n}")
    if k < 1:
        raise ValueError(f"path length must be at least 1, got {k}")
    if k > n - 1:
        return None
    path = [v]
    counter = [0]
    if _path_dfs(g._rows, w, 1 << v, v, k, path, counter, max_nodes):
        return PathWitness(tuple(path))
    return None


def _path_dfs(rows, w, visited, u, steps_left, path, counter, max_nodes) -> bool:
    counter[0] += 1
    if max_nodes is not None and counter[0] > max_nodes:
        raise BudgetExhausted(counter[0])
    if steps_left == 0:
        return u == w
    free = ~visited
    reach = 1 << u
    frontier = reach
    scope = free & ~(1 << u)
    for _ in range(steps_left):
        nxt = 0
        for x in _bits(frontier):
            nxt |= rows[x]
        frontier = nxt & scope & ~reach
        if not frontier:
            break
        reach |= frontier
    if not reach >> w & 1:
        return False
    if (reach & free & ~(1 << w)).bit_count() < steps_left - 1:
        return False
    cands = rows[u] & free
    if steps_left == 1:
        cands &= 1 << w
    else:
        cands &= ~(1 << w)
    for x in _bits(cands):
        path.append(x)
        if _path_dfs(rows, w, visited | 1 << x, x, steps_left - 1, path,
                     counter, max_nodes):
            return True
        path.pop()
    return False
