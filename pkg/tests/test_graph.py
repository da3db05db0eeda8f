import math
import random

import pytest
from conftest import graphs, graphs_with_subset
from hypothesis import given
from hypothesis import strategies as st
from oracles import eta, floyd_warshall, graph_sets, phi, rho

from netspine.generators import cycle_graph, gnp_random_graph, path_graph
from netspine.graph import (
    UNREACHABLE,
    Graph,
    bfs_distances,
    closure,
    connected_components,
    induced_subgraph,
    neighborhood,
    region,
)


def ids(g, *labels):
    return g.nodeset(g.index(x) for x in labels)


def names(g, s):
    return {g.labels[i] for i in s}


# -- construction -------------------------------------------------------------


def test_rejects_self_loops_and_parallel_edges():
    with pytest.raises(ValueError):
        Graph.from_edges([("a", "a")])
    with pytest.raises(ValueError):
        Graph.from_edges([("a", "b"), ("b", "a")])
    with pytest.raises(ValueError):
        Graph([0b10, 0b00])  # asymmetric


def test_edge_count_and_symmetry(k3):
    assert (k3.n, k3.e) == (3, 3)
    for u in k3.nodes:
        assert u not in k3.neighbors(u)
        for v in k3.neighbors(u):
            assert u in k3.neighbors(v)
    assert sum(len(a) for a in k3.adjacency) == 2 * k3.e


@given(graphs())
def test_graph_invariants(g):
    for u in g.nodes:
        assert u not in g.neighbors(u)
        for v in g.neighbors(u):
            assert g.has_edge(v, u)
    assert sum(g.degree(u) for u in g.nodes) == 2 * g.e


# -- neighborhood / region / closure -----------------------------------------


def test_neighborhood_examples(c4, k3):
    assert names(c4, neighborhood(c4, ids(c4, "a"))) == {"b", "d"}
    assert len(neighborhood(c4, c4.nodeset())) == 0
    assert names(k3, neighborhood(k3, ids(k3, "a", "b"))) == {"c"}


def test_region_examples(c4, k3, p3):
    assert names(c4, region(c4, ids(c4, "a"))) == {"a", "b", "d"}
    assert names(k3, region(k3, ids(k3, "a"))) == {"a", "b", "c"}
    assert names(p3, region(p3, ids(p3, "b"))) == {"a", "b", "c"}


def test_closure_examples(c4, k3, c5_chord):
    assert names(k3, closure(k3, ids(k3, "a"))) == {"a", "b", "c"}
    assert names(c4, closure(c4, ids(c4, "a"))) == {"a"}
    assert names(c5_chord, closure(c5_chord, ids(c5_chord, "a"))) == {"a", "b"}


def test_out_of_universe_is_an_error(c4):
    with pytest.raises(IndexError):
        neighborhood(c4, [7])
    from netspine.nodeset import NodeSet

    with pytest.raises(ValueError):
        closure(c4, NodeSet(9, [0]))


@given(graphs_with_subset())
def test_operators_match_set_definitions(gy):
    g, y = gy
    nodes, adj = graph_sets(g)
    ys = set(y)
    assert set(neighborhood(g, y)) == eta(adj, ys)
    assert set(region(g, y)) == rho(adj, ys)
    assert set(closure(g, y)) == phi(adj, ys)


@given(graphs_with_subset())
def test_closure_chain_and_disjoint_neighborhood(gy):
    g, y = gy
    assert y <= closure(g, y) <= region(g, y)
    assert neighborhood(g, y).isdisjoint(y)


@given(graphs(max_nodes=20), st.data())
def test_closure_axioms(g, data):
    universe = list(range(g.universe_size))
    a = set(data.draw(st.sets(st.sampled_from(universe))) if universe else set())
    b = a | (set(data.draw(st.sets(st.sampled_from(universe)))) if universe else set())
    x, y = g.nodeset(a), g.nodeset(b)
    cx = closure(g, x)
    assert x <= cx  # C1
    assert cx <= closure(g, y)  # C2
    assert closure(g, cx) == cx  # C3


# -- bfs ------------------------------------------------------------------------


def test_bfs_examples(p3, c4):
    assert bfs_distances(p3, p3.index("a")) == [0, 1, 2]
    assert bfs_distances(c4, c4.index("a")) == [0, 1, 2, 1]
    two = Graph.from_edges([("a", "b"), ("c", "d")])
    d = bfs_distances(two, 0)
    assert d[:2] == [0, 1] and d[2] == UNREACHABLE and math.isinf(d[3])
    with pytest.raises(IndexError):
        bfs_distances(p3, 3)


def test_bfs_matches_floyd_warshall():
    rng = random.Random(7)
    for _ in range(40):
        g = gnp_random_graph(rng.randint(1, 32), rng.choice([0.05, 0.1, 0.3]), rng.random())
        nodes, adj = graph_sets(g)
        d = floyd_warshall(nodes, adj)
        for s in nodes:
            got = bfs_distances(g, s)
            assert all(got[t] == d[s, t] for t in nodes)


# -- subgraphs and components ----------------------------------------------------


def test_induced_subgraph_examples(k3, c4):
    sub = induced_subgraph(k3, ids(k3, "a", "b"))
    assert (sub.n, sub.e) == (2, 1)
    assert sub.labels == k3.labels
    assert induced_subgraph(c4, c4.nodes) == c4
    path = induced_subgraph(c4, ids(c4, "a", "b", "c"))
    assert path.edges() == [(0, 1), (1, 2)]


def test_components():
    g = Graph.from_edges([("a", "b"), ("c", "d")], nodes=["e"])
    comps = connected_components(g)
    assert [sorted(c) for c in comps] == [[0, 1], [2, 3], [4]]
    assert len(connected_components(cycle_graph(5))) == 1
    assert len(connected_components(path_graph(0))) == 0
