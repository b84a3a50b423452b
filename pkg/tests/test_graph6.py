import networkx as nx
import pytest
from hypothesis import given
import hypothesis.strategies as st

from cyclestar.graph6 import (
    Graph6Error,
    from_graph6,
    read_graph6_lines,
    to_graph6,
    write_graph6_lines,
)
from cyclestar.graphs import build, complete_graph

from conftest import graphs


def test_k4_encoding():
    # 63+4='C', six 1-bits -> 63+63='~'
    assert to_graph6(complete_graph(4)) == b"C~"


def test_single_vertex_encoding():
    assert to_graph6(build(1, [])) == b"@"


def test_empty_graph_encoding():
    assert to_graph6(build(0, [])) == b"?"


def test_header_is_stripped():
    assert from_graph6(b">>graph6<<C~") == complete_graph(4)


@given(graphs())
def test_roundtrip(g):
    assert from_graph6(to_graph6(g)) == g


@given(graphs())
def test_matches_networkx(g):
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.order))
    nxg.add_edges_from(g.edges())
    assert to_graph6(g) == nx.to_graph6_bytes(nxg, header=False).strip()


@given(st.integers(63, 80), st.integers(0, 997))
def test_long_form_roundtrip(n, seed):
    import random

    rng = random.Random(seed)
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.05
    ]
    g = build(n, edges)
    data = to_graph6(g)
    assert data[0] == 126
    assert from_graph6(data) == g
    nxg = nx.Graph()
    nxg.add_nodes_from(range(n))
    nxg.add_edges_from(edges)
    assert data == nx.to_graph6_bytes(nxg, header=False).strip()


def test_rejects_byte_out_of_range():
    with pytest.raises(Graph6Error):
        from_graph6(b"C\x1f\x1f")
    with pytest.raises(Graph6Error):
        from_graph6(bytes([127, 70]))


def test_rejects_truncated():
    good = to_graph6(complete_graph(7))
    with pytest.raises(Graph6Error):
        from_graph6(good[:-1])
    with pytest.raises(Graph6Error):
        from_graph6(good + b"~")


def test_rejects_nonzero_padding():
    # order 3 has 3 adjacency bits; the low 3 bits of the byte are padding
    with pytest.raises(Graph6Error):
        from_graph6(bytes([63 + 3, 63 + 0b000111]))


def test_rejects_empty():
    with pytest.raises(Graph6Error):
        from_graph6(b"")


def test_multi_graph_lines():
    gs = [complete_graph(3), build(2, []), complete_graph(5)]
    data = write_graph6_lines(gs)
    assert data.endswith(b"\n")
    assert list(read_graph6_lines(data)) == gs
