import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from minorbench.connectivity import (COMMON_END, FULLY_DISJOINT, INTERNAL, PathSystem, Separator,
                                     disjoint_paths, min_vertex_separator, separates, validate_path_system,
                                     vertex_connectivity)
from minorbench.graph import Graph, GraphError, complete, complete_multipartite, cycle
from oracles import brute_connectivity, brute_separates, random_graph


def test_examples():
    assert vertex_connectivity(complete(8)) == 7
    assert vertex_connectivity(cycle(5)) == 2
    k = complete_multipartite(2, 2, 2, 2, 2)
    assert vertex_connectivity(k) == brute_connectivity(k) == 8


def test_k9_single_edges():
    ps = disjoint_paths(complete(9), range(4), range(4, 8), 4)
    assert isinstance(ps, PathSystem) and all(len(p) == 2 for p in ps.paths)
    assert validate_path_system(complete(9), ps)


def test_c5_arcs():
    ps = disjoint_paths(cycle(5), {0}, {2}, 2, INTERNAL)
    assert sorted(ps.paths) == [(0, 1, 2), (0, 4, 3, 2)]
    assert validate_path_system(cycle(5), ps)


def test_two_k7_sharing_five():
    edges = [(u, v) for grp in (range(7), range(2, 9)) for u in grp for v in grp if u < v]
    rng = random.Random(0)
    g = Graph.from_edges(12, edges + [(u, v) for u in range(12) for v in range(u + 1, 12) if rng.random() < 0.8])
    res = disjoint_paths(g, range(7), range(2, 9), 7)
    if vertex_connectivity(g) >= 7:
        assert isinstance(res, PathSystem)
        # shared clique gives the single-vertex paths, emitted first
        assert [p for p in res.paths if len(p) == 1] == [(v,) for v in range(2, 7)]
        assert res.paths[:5] == tuple((v,) for v in range(2, 7))
        assert validate_path_system(g, res)


def test_fan_failure_gives_separator():
    g = Graph.from_edges(6, [(0, 1), (0, 5), (1, 2), (1, 3), (5, 4), (1, 4)])
    res = disjoint_paths(g, {0}, {2, 3, 4}, 3, COMMON_END)
    assert isinstance(res, Separator) and len(res) < 3
    assert separates(g, res.vertices - {0}, {0}, {2, 3, 4})


def test_inconsistent_k():
    with pytest.raises(GraphError):
        disjoint_paths(complete(5), {0, 1}, {2, 3}, 3)


def test_connectivity_matches_brute_force():
    rng = random.Random(9)
    for _ in range(1000):
        g = random_graph(rng, rng.randint(2, 8))
        k = vertex_connectivity(g)
        assert k == brute_connectivity(g)
        sep = min_vertex_separator(g)
        if sep is not None and k < g.n - 1:
            assert len(sep) == k


@given(st.randoms(use_true_random=False))
@settings(max_examples=200)
def test_duality(rng):
    n = rng.randint(2, 8)
    g = random_graph(rng, n)
    vs = list(range(n))
    a = set(rng.sample(vs, rng.randint(1, n)))
    b = set(rng.sample(vs, rng.randint(1, n)))
    k = rng.randint(0, min(len(a), len(b)))
    res = disjoint_paths(g, a, b, k, FULLY_DISJOINT)
    best = brute_separates(g, a, b)
    if isinstance(res, PathSystem):
        assert len(res) == k and validate_path_system(g, res)
        for p in res.paths:
            assert p[0] in a and p[-1] in b
            assert not set(p[1:]) & a and not set(p[:-1]) & b
        assert best >= k
    else:
        assert len(res) < k and separates(g, res.vertices, a, b)
        assert best < k


@given(st.randoms(use_true_random=False))
@settings(max_examples=100)
def test_agrees_with_networkx(rng):
    g = random_graph(rng, rng.randint(2, 12), 0.6)
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    assert vertex_connectivity(g) == nx.node_connectivity(h)
