import hypothesis.strategies as st
from hypothesis import given

from cyclestar.canon import are_isomorphic, canonical_graph, canonical_key
from cyclestar.graphs import complete_graph, cycle_graph, disjoint_union

from conftest import graphs, permuted
from oracles import naive_enumerate_classes, naive_isomorphic


@given(graphs(min_order=1), st.randoms(use_true_random=False))
def test_invariant_under_relabeling(g, rng):
    perm = list(range(g.order))
    rng.shuffle(perm)
    assert canonical_key(g) == canonical_key(permuted(g, perm))


@given(graphs())
def test_canonical_graph_is_isomorphic_fixed_point(g):
    cg = canonical_graph(g)
    assert canonical_key(cg) == canonical_key(g)
    assert cg.order == g.order and cg.edge_count() == g.edge_count()
    assert canonical_graph(cg) == cg


def test_complete_on_small_orders():
    # distinct keys must match the naive labeled-enumeration classes
    for order in range(5):
        reps = naive_enumerate_classes(order)
        keys = {canonical_key(g) for g in reps}
        assert len(keys) == len(reps)


def test_self_complementary_five_cycle():
    c5 = cycle_graph(5)
    assert are_isomorphic(c5.complement(), c5)


def test_distinguishes_non_isomorphic():
    assert not are_isomorphic(cycle_graph(6), disjoint_union(cycle_graph(3), cycle_graph(3)))
    assert not are_isomorphic(complete_graph(4), cycle_graph(4))


@given(graphs(max_order=5), graphs(max_order=5))
def test_agrees_with_permutation_oracle(g1, g2):
    assert are_isomorphic(g1, g2) == naive_isomorphic(g1, g2)
