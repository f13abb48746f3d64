import random

import pytest
from hypothesis import given, settings, strategies as st

from minorbench.canon import are_isomorphic
from minorbench.cockade import (K8, K22222, CockadeError, CockadePlan, Gluing, build_cockade,
                                cockade_coloring, random_plan, recognize_cockade)
from minorbench.coloring import is_proper
from minorbench.graph import Graph, complete, complete_multipartite
from minorbench.minors import has_k9eq_minor


def test_single_pieces():
    assert build_cockade(CockadePlan((K8,))) == complete(8)
    k = build_cockade(CockadePlan((K22222,)))
    assert are_isomorphic(k, complete_multipartite(2, 2, 2, 2, 2))
    assert cockade_coloring(CockadePlan((K8,))).palette_size == 8
    assert cockade_coloring(CockadePlan((K22222,))).palette_size <= 8


def test_two_pieces_edge_counts():
    g = build_cockade(CockadePlan((K8, K8), (Gluing(1, (0, 1, 2, 3, 4), (3, 4, 5, 6, 7)),)))
    assert (g.n, g.edge_count()) == (11, 46)
    g = build_cockade(CockadePlan((K8, K22222), (Gluing(1, (0, 2, 4, 6, 8), (0, 1, 2, 3, 4)),)))
    assert (g.n, g.edge_count()) == (13, 58)


def test_invalid_plans():
    with pytest.raises(CockadeError):  # local vertices 0 and 1 are a non-edge of K22222
        build_cockade(CockadePlan((K8, K22222), (Gluing(1, (0, 1, 4, 6, 8), (0, 1, 2, 3, 4)),)))
    with pytest.raises(CockadeError):  # piece never glued
        build_cockade(CockadePlan((K8, K8)))
    with pytest.raises(CockadeError):  # glued twice
        gl = Gluing(1, (0, 1, 2, 3, 4), (0, 1, 2, 3, 4))
        build_cockade(CockadePlan((K8, K8), (gl, gl)))
    with pytest.raises(CockadeError):  # host set not a clique
        plan = CockadePlan((K22222, K8), (Gluing(1, (0, 1, 2, 3, 4), (0, 1, 2, 4, 6)),))
        build_cockade(plan)


def test_recognition_examples():
    assert recognize_cockade(complete(8)) == CockadePlan((K8,))
    assert recognize_cockade(complete(9)) is None
    assert recognize_cockade(complete_multipartite(2, 2, 2, 2, 2)).pieces == (K22222,)


def test_plan_text_roundtrip_and_errors():
    plan = random_plan(4, random.Random(3))
    text = plan.to_text()
    assert CockadePlan.from_text("# a comment\n" + text) == plan
    for bad in ("", "piece K8\n", "cockade 1\npiece K9\n", "cockade 1\npiece K8\n1 0 1 -> 2 3\n"):
        with pytest.raises(CockadeError):
            CockadePlan.from_text(bad)


@given(st.integers(1, 4), st.randoms(use_true_random=False))
@settings(max_examples=60)
def test_roundtrip_property(pieces, rng):
    plan = random_plan(pieces, rng)
    g = build_cockade(plan)
    assert g.edge_count() == 6 * g.n - 20 and g.n == plan.order()
    back = recognize_cockade(g)
    assert back is not None and are_isomorphic(build_cockade(back), g)
    col = cockade_coloring(plan)
    assert is_proper(g, col) and col.palette_size <= 8


def test_recognition_survives_relabeling():
    rng = random.Random(8)
    for _ in range(10):
        g = build_cockade(random_plan(3, rng))
        perm = list(range(g.n))
        rng.shuffle(perm)
        assert recognize_cockade(g.relabel(perm)) is not None


def test_near_misses_rejected():
    g = build_cockade(random_plan(2, random.Random(1)))
    # same edge count, but no longer a cockade after moving one edge
    u, v = next(iter(g.edges()))
    non = [(a, b) for a in range(g.n) for b in range(a + 1, g.n) if not g.has_edge(a, b)][0]
    h = g.add_edges([non])
    edges = [e for e in h.edges() if e != (u, v)]
    moved = Graph.from_edges(g.n, edges)
    assert recognize_cockade(moved) is None


def test_small_cockades_have_no_k9eq():
    rng = random.Random(13)
    checked = 0
    while checked < 8:
        plan = random_plan(rng.randint(1, 3), rng)
        if plan.order() > 18:
            continue
        assert has_k9eq_minor(build_cockade(plan)) is None
        checked += 1
