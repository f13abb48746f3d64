import random

import pytest
from hypothesis import given, settings, strategies as st

from minorbench.cockade import CockadePlan, Gluing, build_cockade
from minorbench.graph import (Graph, GraphError, MinorStep, complete, complete_multipartite, cycle,
                              kt_doubleminus, kt_minus, minor_step, petersen)
from minorbench.minors import (BranchModel, brute_minor_oracle, check_model, find_clique_separator,
                               has_k9eq_minor, has_kt_doubleminus_minor, has_minor, separation_threshold)
from oracles import random_graph


def test_petersen_has_k5():
    m = has_minor(petersen(), complete(5))
    assert m is not None and check_model(petersen(), complete(5), m)


def test_k8_has_no_k9():
    assert has_minor(complete(8), complete(9)) is None


def test_k2x5_has_no_k9eq():
    assert has_k9eq_minor(complete_multipartite(2, 2, 2, 2, 2)) is None


def test_k9eq_variants_contain_themselves():
    for idx, h in enumerate(kt_doubleminus(9)):
        found = has_k9eq_minor(h)
        assert found is not None and check_model(h, kt_doubleminus(9)[found[0]], found[1])


def test_two_k8_cockade_has_no_k9eq():
    plan = CockadePlan(("K8", "K8"), (Gluing(1, (0, 1, 2, 3, 4), (3, 4, 5, 6, 7)),))
    assert has_k9eq_minor(build_cockade(plan)) is None


def test_check_model_rejects_bad_models():
    g = cycle(5)
    h = complete(3)
    assert check_model(g, h, BranchModel((frozenset({0, 1}), frozenset({2, 3}), frozenset({4}))))
    # overlap
    assert not check_model(g, h, BranchModel((frozenset({0, 1}), frozenset({1, 2, 3}), frozenset({4}))))
    # disconnected branch set
    assert not check_model(g, h, BranchModel((frozenset({0, 2}), frozenset({1}), frozenset({3, 4}))))
    # empty branch set and wrong count
    assert not check_model(g, h, BranchModel((frozenset(), frozenset({1}), frozenset({3}))))
    assert not check_model(g, h, BranchModel((frozenset({0}), frozenset({1}))))
    # missing edge
    assert not check_model(g, h, BranchModel((frozenset({0}), frozenset({1}), frozenset({3}))))


def test_model_text_roundtrip():
    m = BranchModel((frozenset({0, 3}), frozenset({1}), frozenset({2, 4, 5})))
    assert BranchModel.parse(m.describe()) == m


def test_oracle_guard():
    with pytest.raises(GraphError):
        brute_minor_oracle(complete(10), complete(3))


def test_separation_threshold():
    assert separation_threshold(complete(5)) == 5
    assert separation_threshold(kt_doubleminus(9)[0]) == 6
    assert separation_threshold(kt_doubleminus(9)[1]) == 5


def test_clique_separator_found():
    plan = CockadePlan(("K8", "K8"), (Gluing(1, (0, 1, 2, 3, 4), (3, 4, 5, 6, 7)),))
    clique, comps = find_clique_separator(build_cockade(plan), 5)
    assert clique.bit_count() == 5 and len(comps) == 2
    assert find_clique_separator(complete(6), 5) is None


@given(st.integers(2, 8), st.randoms(use_true_random=False), st.sampled_from(
    [complete(3), complete(4), kt_minus(4), cycle(4), cycle(5), kt_doubleminus(5)[0], kt_doubleminus(5)[1]]))
@settings(max_examples=150)
def test_agrees_with_oracle(n, rng, h):
    g = random_graph(rng, n)
    m = has_minor(g, h)
    assert (m is not None) == brute_minor_oracle(g, h)
    if m is not None:
        assert check_model(g, h, m)


@given(st.randoms(use_true_random=False))
@settings(max_examples=60)
def test_decomposition_matches_plain_search(rng):
    g = random_graph(rng, rng.randint(6, 12), rng.uniform(0.4, 0.95))
    for h in kt_doubleminus(6):
        assert (has_minor(g, h) is None) == (has_minor(g, h, decompose=False) is None)


@given(st.randoms(use_true_random=False))
@settings(max_examples=100)
def test_minor_closed_under_steps(rng):
    # a minor of a minor is a minor: contracting an edge of G keeps the H-minors of the result
    g = random_graph(rng, rng.randint(3, 9))
    edges = list(g.edges())
    if not edges:
        return
    u, v = rng.choice(edges)
    small = minor_step(g, MinorStep.contract(u, v)).graph
    h = complete(4)
    if has_minor(small, h) is not None:
        assert has_minor(g, h) is not None


def test_kt_doubleminus_small():
    assert has_kt_doubleminus_minor(complete(6), 6)[0] == 0
    assert has_kt_doubleminus_minor(cycle(6), 6) is None
