import pytest

from minorbench.canon import canonical_form
from minorbench.generate import (MAX_GENERATION_ORDER, format_cursor, generate, generate_max_degree,
                                 parse_cursor, subtree_roots, walk)
from minorbench.graph import GraphError, complement
from oracles import burnside_graph_count


@pytest.mark.parametrize("n", range(1, 8))
def test_counts_match_burnside(n):
    assert sum(1 for _ in generate(n)) == burnside_graph_count(n)


def test_min_degree_4_on_6():
    # complements are matchings with 0..3 edges
    gs = list(generate(6, 4))
    assert len(gs) == 4
    assert sorted(complement(g).edge_count() for g in gs) == [0, 1, 2, 3]


def test_output_is_duplicate_free_and_constrained():
    seen = set()
    for g in generate(7, 3):
        assert g.min_degree() >= 3
        c = canonical_form(g)
        assert c not in seen
        seen.add(c)


@pytest.mark.parametrize("n", range(1, 8))
def test_direct_and_complement_agree(n):
    for d in range(n):
        direct = {canonical_form(g) for g in generate(n, d, "direct")}
        dual = {canonical_form(complement(g)) for g in generate_max_degree(n, n - 1 - d)}
        assert direct == dual
        assert len(direct) == sum(1 for _ in generate(n, d, "complement"))


def test_cursor_resume_is_exact():
    full = [p for p, _ in walk(7, 2)]
    cut = full[100]
    rest = [p for p, _ in walk(7, 2, cursor=cut)]
    assert rest == full[101:]
    n, d, mode, path = parse_cursor(format_cursor(7, 2, "auto", cut))
    assert (n, d, mode, path) == (7, 2, "direct", cut)


def test_subtrees_partition_output():
    full = [p for p, _ in walk(8, 4)]
    roots = subtree_roots(8, 4, split_level=5)
    joined = [p for r in roots for p, _ in walk(8, 4, root_path=r)]
    assert joined == full


def test_guards():
    with pytest.raises(GraphError):
        list(generate(MAX_GENERATION_ORDER + 1))
    with pytest.raises(GraphError):
        list(generate(5, 5))
    with pytest.raises(GraphError):
        parse_cursor("hello")
