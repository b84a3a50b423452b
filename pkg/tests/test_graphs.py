import pytest
from hypothesis import given
import hypothesis.strategies as st

from cyclestar.graphs import (
    Graph,
    GraphBuildError,
    build,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    disjoint_union,
    path_graph,
)

from conftest import graphs


def test_build_triangle():
    g = build(3, [(0, 1), (1, 2), (0, 2)])
    assert g == complete_graph(3)
    assert g.edge_count() == 3


def test_build_edgeless():
    g = build(2, [])
    assert g.min_degree() == 0
    assert g.edge_count() == 0


def test_build_deduplicates():
    g = build(4, [(0, 1), (1, 0)])
    assert g.edge_count() == 1


def test_build_rejects_loop():
    with pytest.raises(GraphBuildError):
        build(3, [(1, 1)])


def test_build_rejects_out_of_range():
    with pytest.raises(GraphBuildError):
        build(3, [(0, 3)])
    with pytest.raises(GraphBuildError):
        build(3, [(-1, 0)])


def test_degrees():
    assert complete_graph(5).min_degree() == 4
    star = build(4, [(0, 1), (0, 2), (0, 3)])
    assert star.max_degree() == 3
    assert star.degree(0) == 3 and star.degree(1) == 1
    two_k5 = disjoint_union(complete_graph(5), complete_graph(5))
    assert two_k5.min_degree() == 4


def test_complement_of_complete_is_empty():
    g = complete_graph(4).complement()
    assert g.edge_count() == 0 and g.order == 4


def test_induced_subgraph_of_complete():
    assert complete_graph(5).induced_subgraph([0, 2, 4]) == complete_graph(3)


def test_induced_subgraph_relabels_ascending():
    g = build(5, [(1, 3), (3, 4)])
    h = g.induced_subgraph([1, 3, 4])
    assert sorted(h.edges()) == [(0, 1), (1, 2)]


def test_induced_subgraph_rejects_out_of_range():
    with pytest.raises(GraphBuildError):
        complete_graph(3).induced_subgraph([0, 5])


def test_disjoint_union_counts():
    g = disjoint_union(complete_graph(3), complete_graph(3))
    assert g.order == 6 and g.edge_count() == 6
    assert not g.is_connected()


def test_connectivity():
    assert path_graph(4).is_connected()
    assert complete_bipartite(2, 3).is_connected()
    assert not disjoint_union(path_graph(2), path_graph(2)).is_connected()
    assert build(1, []).is_connected()
    assert build(0, []).is_connected()


@given(graphs())
def test_complement_is_involution(g):
    assert g.complement().complement() == g


@given(graphs(min_order=1))
def test_degree_complement_identity(g):
    c = g.complement()
    for v in range(g.order):
        assert g.degree(v) + c.degree(v) == g.order - 1


@given(graphs(), graphs())
def test_disjoint_union_sizes(g1, g2):
    u = disjoint_union(g1, g2)
    assert u.order == g1.order + g2.order
    assert u.edge_count() == g1.edge_count() + g2.edge_count()


@given(graphs(min_order=1), st.data())
def test_induced_subgraph_preserves_inside_edges(g, data):
    verts = data.draw(
        st.lists(st.integers(0, g.order - 1), unique=True, max_size=g.order)
    )
    h = g.induced_subgraph(verts)
    vs = sorted(set(verts))
    assert h.order == len(vs)
    expected = sum(1 for u in vs for v in vs if u < v and g.has_edge(u, v))
    assert h.edge_count() == expected


def test_graph_value_semantics():
    g1 = build(3, [(0, 1)])
    g2 = build(3, [(1, 0)])
    assert g1 == g2 and hash(g1) == hash(g2)
    assert g1 != build(3, [(0, 2)])
