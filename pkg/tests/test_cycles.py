import pytest
import hypothesis.strategies as st
from hypothesis import given

from cyclestar.cycles import (
    even_cycle_spectrum,
    find_cycle_of_length,
    find_cycle_of_length_at_least,
    find_path_of_length,
    is_hamiltonian,
    is_pancyclic,
    longest_even_cycle,
)
from cyclestar.graphs import (
    build,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    disjoint_union,
)
from cyclestar.validate import validate_cycle_witness, validate_path_witness
from cyclestar.witnesses import BudgetExhausted

from conftest import graphs
from oracles import naive_cycle_exists, naive_even_spectrum, naive_path_exists


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build(10, outer + spokes + inner)


def test_k5_is_pancyclic():
    assert find_cycle_of_length(complete_graph(5), 5) is not None
    assert is_pancyclic(complete_graph(5))


def test_disjoint_cliques_have_no_long_cycle():
    g = disjoint_union(complete_graph(5), complete_graph(5))
    assert find_cycle_of_length(g, 6) is None


def test_petersen_girth_and_hamiltonicity():
    g = petersen()
    assert find_cycle_of_length(g, 3) is None
    assert find_cycle_of_length(g, 6) is not None
    assert is_hamiltonian(g) is None
    assert even_cycle_spectrum(g) == {6, 8}
    assert longest_even_cycle(g) == 8


def test_even_spectra():
    assert even_cycle_spectrum(cycle_graph(6)) == {6}
    assert even_cycle_spectrum(complete_graph(5)) == {4}
    assert even_cycle_spectrum(complete_bipartite(3, 3)) == {4, 6}


def test_longest_even_cycle_values():
    assert longest_even_cycle(cycle_graph(7)) == 0
    assert longest_even_cycle(complete_graph(6)) == 6
    k10 = [(u, v) for u in range(10) for v in range(u + 1, 10)]
    shared = build(19, k10 + [(u, v) for u in range(9, 19) for v in range(u + 1, 19)])
    assert longest_even_cycle(shared) == 10


def test_hamiltonicity():
    assert is_hamiltonian(complete_bipartite(2, 3)) is None
    assert is_hamiltonian(cycle_graph(5)) is not None


def test_pancyclicity():
    assert not is_pancyclic(cycle_graph(6))
    wheel = build(6, [(i, (i + 1) % 5) for i in range(5)] + [(5, i) for i in range(5)])
    assert is_pancyclic(wheel)


def test_argument_errors():
    with pytest.raises(ValueError):
        find_cycle_of_length(complete_graph(4), 2)
    with pytest.raises(ValueError):
        is_hamiltonian(build(2, [(0, 1)]))
    with pytest.raises(ValueError):
        is_pancyclic(build(2, []))
    with pytest.raises(ValueError):
        find_path_of_length(complete_graph(4), 1, 1, 2)
    with pytest.raises(ValueError):
        find_path_of_length(complete_graph(4), 0, 1, 0)


def test_paths_in_k4():
    assert find_path_of_length(complete_graph(4), 0, 1, 3) is not None
    assert find_path_of_length(complete_graph(4), 0, 1, 1) is not None


def test_path_parity_in_c4():
    c4 = cycle_graph(4)
    assert find_path_of_length(c4, 0, 2, 3) is None
    assert find_path_of_length(c4, 0, 2, 2) is not None


@given(graphs(min_order=3, max_order=7), st.integers(3, 7))
def test_cycle_search_matches_oracle(g, k):
    witness = find_cycle_of_length(g, k)
    assert (witness is not None) == naive_cycle_exists(g, k)
    if witness is not None:
        assert validate_cycle_witness(g, witness, k)


@given(graphs(min_order=3, max_order=7))
def test_spectrum_matches_oracle(g):
    assert even_cycle_spectrum(g) == naive_even_spectrum(g)


@given(graphs(min_order=2, max_order=7), st.data())
def test_path_search_matches_oracle(g, data):
    v = data.draw(st.integers(0, g.order - 1))
    w = data.draw(st.integers(0, g.order - 1).filter(lambda x: x != v))
    k = data.draw(st.integers(1, g.order - 1))
    witness = find_path_of_length(g, v, w, k)
    assert (witness is not None) == naive_path_exists(g, v, w, k)
    if witness is not None:
        assert validate_path_witness(g, witness, v, w, k)


@given(graphs(min_order=3, max_order=7), st.integers(3, 7))
def test_at_least_search_matches_exact_chain(g, k):
    found = find_cycle_of_length_at_least(g, k)
    expected = any(naive_cycle_exists(g, j) for j in range(k, g.order + 1))
    assert (found is not None) == expected
    if found is not None:
        assert found.length >= k
        assert validate_cycle_witness(g, found)


def test_budget_exhaustion_is_loud():
    g = complete_graph(8)
    with pytest.raises(BudgetExhausted):
        # C7 search in K8 explores more than two nodes
        find_cycle_of_length(g, 7, max_nodes=2)


def test_budget_generous_enough_succeeds():
    g = complete_graph(8)
    assert find_cycle_of_length(g, 7, max_nodes=10**6) is not None


def test_witness_is_deterministic_and_lex_minimal_start():
    g = complete_graph(5)
    w1 = find_cycle_of_length(g, 4)
    w2 = find_cycle_of_length(g, 4)
    assert w1 == w2
    assert w1.vertices[0] == 0 and w1.vertices[1] == 1
