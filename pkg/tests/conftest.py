import hypothesis.strategies as st
from hypothesis import settings

from cyclestar.graphs import Graph, build

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@st.composite
def graphs(draw, min_order=0, max_order=8):
    n = draw(st.integers(min_order, max_order))
    nbits = n * (n - 1) // 2
    bits = draw(st.integers(0, (1 << nbits) - 1))
    edges = []
    i = 0
    for v in range(1, n):
        for u in range(v):
            if bits >> i & 1:
                edges.append((u, v))
            i += 1
    return build(n, edges)


def permuted(g: Graph, perm) -> Graph:
    return build(g.order, [(perm[u], perm[v]) for u, v in g.edges()])
