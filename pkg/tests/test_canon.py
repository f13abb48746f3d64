import random
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from minorbench.canon import are_isomorphic, canonical_form, canonical_graph
from minorbench.graph import Graph, GraphError, complete, cycle, petersen
from oracles import all_labeled, brute_canon, random_graph


def _nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def _shuffle(g, rng):
    perm = list(range(g.n))
    rng.shuffle(perm)
    return g.relabel(perm)


def test_c5_relabeled():
    rng = random.Random(1)
    assert canonical_form(cycle(5)) == canonical_form(_shuffle(cycle(5), rng))


def test_c4_vs_triangle_plus_isolated():
    tri = Graph.from_edges(4, [(0, 1), (1, 2), (0, 2)])
    assert canonical_form(cycle(4)) != canonical_form(tri)


@pytest.mark.parametrize("n,classes", [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34)])
def test_labeled_brute_force_classes(n, classes):
    # certificates partition labeled graphs exactly as brute-force canonisation does
    pairs = {}
    for g in all_labeled(n):
        pairs.setdefault(canonical_form(g), set()).add(brute_canon(g))
    assert len(pairs) == classes
    assert all(len(v) == 1 for v in pairs.values())


def test_relabel_invariance_sample():
    rng = random.Random(2)
    for _ in range(10_000):
        g = random_graph(rng, rng.randint(1, 10))
        assert canonical_form(g) == canonical_form(_shuffle(g, rng))


def test_non_isomorphic_pairs_differ():
    rng = random.Random(3)
    checked = 0
    while checked < 10_000:
        n = rng.randint(2, 6)
        g, h = random_graph(rng, n), random_graph(rng, n)
        if g.edge_count() != h.edge_count():
            continue
        same = brute_canon(g) == brute_canon(h)
        assert (canonical_form(g) == canonical_form(h)) == same
        checked += 1


@given(st.integers(1, 14), st.randoms(use_true_random=False))
def test_agrees_with_networkx(n, rng):
    g, h = random_graph(rng, n, 0.5), random_graph(rng, n, 0.5)
    assert are_isomorphic(g, h) == nx.is_isomorphic(_nx(g), _nx(h))


def test_regular_and_symmetric_graphs():
    rng = random.Random(4)
    for g in (petersen(), complete(12), Graph.empty(16), cycle(16)):
        assert canonical_form(g) == canonical_form(_shuffle(g, rng))
    assert canonical_graph(_shuffle(petersen(), rng)) == canonical_graph(petersen())


def test_guard():
    with pytest.raises(GraphError):
        Graph.empty(65)
