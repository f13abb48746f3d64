import random

import pytest
from hypothesis import given, settings, strategies as st

from minorbench.coloring import (COLORING_GUARD, Coloring, chromatic_number, criticality_profile,
                                 find_high_chromatic_minor, is_contraction_critical, is_proper,
                                 kempe_component, kempe_swap, proper_minor_steps)
from minorbench.graph import (Graph, GraphError, complete, complete_multipartite, cycle, minor_step, petersen)
from oracles import brute_chromatic, random_graph


@pytest.mark.parametrize("g,k", [(complete(6), 6), (complete_multipartite(2, 2, 2, 2, 2), 5), (cycle(5), 3),
                                 (petersen(), 3), (Graph.empty(4), 1), (Graph.empty(0), 0)])
def test_chromatic_examples(g, k):
    got, col = chromatic_number(g)
    assert got == k and is_proper(g, col) and (g.n == 0 or col.palette_size == k)


def test_chromatic_matches_brute_force():
    rng = random.Random(21)
    for _ in range(1000):
        g = random_graph(rng, rng.randint(1, 8))
        k, col = chromatic_number(g)
        assert k == brute_chromatic(g)
        assert is_proper(g, col) and max(col.colors) < k


def test_guard():
    with pytest.raises(GraphError):
        chromatic_number(Graph.empty(COLORING_GUARD + 1))


def test_is_proper_length_mismatch():
    with pytest.raises(GraphError):
        is_proper(cycle(4), [0, 1, 0])


def test_kempe_swap_on_c4():
    c = Coloring((0, 1, 0, 1))
    comp = kempe_component(cycle(4), c, 0, 0, 1)
    assert comp == frozenset(range(4))
    assert kempe_swap(cycle(4), c, comp, 0, 1).colors == (1, 0, 1, 0)


def test_kempe_swap_rejects_open_component():
    with pytest.raises(GraphError):
        kempe_swap(cycle(4), Coloring((0, 1, 0, 1)), {0, 1}, 0, 1)


def test_kempe_fuzz():
    rng = random.Random(5)
    for _ in range(10_000):
        g = random_graph(rng, rng.randint(2, 9))
        _, col = chromatic_number(g)
        k = max(col.colors) + 2
        colors = list(col.colors)
        for v in range(g.n):  # recolour randomly while staying proper
            free = [c for c in range(k) if all(colors[u] != c for u in g.neighbors(v))]
            colors[v] = rng.choice(free)
        c = Coloring(tuple(colors))
        v = rng.randrange(g.n)
        a = c[v]
        b = rng.choice([x for x in range(k) if x != a])
        comp = kempe_component(g, c, v, a, b)
        s = kempe_swap(g, c, comp, a, b)
        assert is_proper(g, s)
        assert kempe_swap(g, s, comp, a, b) == c


def test_c5_needs_full_lattice():
    g = cycle(5)
    assert all(chromatic_number(minor_step(g, st_).graph)[0] <= 2 for st_ in proper_minor_steps(g))
    assert not is_contraction_critical(g, 3)
    deeper = find_high_chromatic_minor(g, 3)
    assert deeper is not None and deeper.n == 3


@pytest.mark.parametrize("n", range(1, 7))
def test_complete_graphs_are_critical(n):
    assert is_contraction_critical(complete(n), n)


def test_criticality_rejections():
    assert not is_contraction_critical(complete(4), 3)
    assert not is_contraction_critical(cycle(4), 2)


def test_profile_c5():
    p = criticality_profile(cycle(5), 3)
    assert p.violations == [0, 1, 2, 3, 4] and p.degree_violations == []
    assert p.refutes_criticality


def test_profile_complete_graph_passes():
    p = criticality_profile(complete(11), 11)
    assert not p.refutes_criticality
    assert p.min_degree_vertices_forced == 11


def test_degree11_forcing():
    # 12n - 2e >= 40 whenever e <= 6n - 20 and the minimum degree is 11
    g = complete(12)
    p = criticality_profile(g, 10)
    assert p.degree11_check() is None or p.degree11_check()


@given(st.randoms(use_true_random=False))
@settings(max_examples=100)
def test_profile_counts(rng):
    g = random_graph(rng, rng.randint(1, 10))
    p = criticality_profile(g, 3)
    assert sum(p.degree_counts.values()) == g.n
    assert p.min_degree_vertices_forced <= p.degree_counts.get(p.min_degree, 0)
