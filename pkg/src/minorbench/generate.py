"""Isomorph-free generation of graphs of fixed order under degree bounds.

Graphs are grown one vertex at a time by canonical augmentation.  The
canonical parent of a graph ``C`` is ``C - w`` where ``w`` is the last vertex
of its canonical labelling started from the degree-sorted equitable
partition.  A child ``P + v`` is accepted iff ``v`` lies in the automorphism
orbit of ``w``; children of one parent are additionally deduplicated against
each other, which is the only place equal classes can meet.

Dense requests (``min_degree > (n - 1) / 2``) are generated in the
complement domain, where the condition becomes ``max_degree <= n - 1 - d``.

Cursor file format (text, one ``key=value`` per line)::

    minorbench-cursor 1
    n=11
    min_degree=6
    strategy=complement
    path=0,3,1,...

``path`` lists the child index taken at each level below the one-vertex
root, down to the last emitted leaf; resuming skips everything up to and
including that leaf.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .canon import canonical_form, degree_partition, individualise, orbit_of, refine, search_refined
from .graph import Graph, GraphError, complement

MAX_GENERATION_ORDER = 16


@dataclass(frozen=True)
class Constraint:
    """Degree window a graph of the final order ``n`` must satisfy.

    In the tree, a graph on ``m`` vertices only has to meet the window relaxed by
    ``n - m`` on the minimum side, since each vertex deletion lowers a degree
    by at most one.
    """

    n: int
    min_degree: int = 0
    max_degree: int | None = None

    def floor(self, m: int) -> int:
        return max(0, self.min_degree - (self.n - m))

    def ceiling(self, m: int) -> int:
        return m - 1 if self.max_degree is None else min(m - 1, self.max_degree)


def _canonical_child(c: Graph, v: int) -> tuple[int, ...] | None:
    """Certificate of ``c`` if ``v`` is in the orbit of its canonical deletion vertex, else ``None``.

    The certificate is the canonical code relative to the refined degree
    partition, so it can also serve to deduplicate siblings.
    """
    # refinement splits cells in place, so the last cell holds only maximum-degree vertices
    if c.adj[v].bit_count() != max(row.bit_count() for row in c.adj):
        return None
    cells = refine(c.adj, degree_partition(c))
    last = cells[-1]
    if not last >> v & 1:
        return None
    code, order, autos = search_refined(c, cells)
    w = order[-1]
    if w == v or orbit_of(w, autos) >> v & 1:
        return code
    idx = len(cells) - 1
    if canonical_form(c, individualise(cells, idx, v)) == canonical_form(c, individualise(cells, idx, w)):
        return code
    return None


def children(p: Graph, con: Constraint) -> list[Graph]:
    """Accepted children of ``p`` in deterministic order (by neighbour set, small first)."""
    m = p.n + 1
    lo, hi = con.floor(m), con.ceiling(m)
    degs = p.degrees()
    # an old vertex outside S must already meet the new floor; inside S its degree grows by one
    must = 0
    may = 0
    for v, d in enumerate(degs):
        if d + 1 < lo or d > hi:
            return []
        if d < lo:
            must |= 1 << v
        if d + 1 <= hi:
            may |= 1 << v
    if must & ~may:
        return []
    optional = [v for v in range(p.n) if may >> v & 1 and not must >> v & 1]
    base = must.bit_count()
    out = []
    seen: set[tuple[int, ...]] = set()
    for size in range(max(lo - base, 0), min(hi - base, len(optional)) + 1):
        for extra in combinations(optional, size):
            s = must
            for v in extra:
                s |= 1 << v
            adj = [row | (1 << p.n if s >> u & 1 else 0) for u, row in enumerate(p.adj)]
            adj.append(s)
            c = Graph._trusted(m, tuple(adj))
            cert = _canonical_child(c, p.n)
            if cert is None or cert in seen:
                continue
            seen.add(cert)
            out.append(c)
    return out


def _walk(node: Graph, level_path: tuple[int, ...], con: Constraint, resume: tuple[int, ...] | None,
          ) -> Iterator[tuple[tuple[int, ...], Graph]]:
    if node.n == con.n:
        if resume is None or len(resume):
            yield level_path, node
        return
    kids = children(node, con)
    start = 0
    if resume:
        start = resume[0]
    for i in range(start, len(kids)):
        sub = resume[1:] if resume and i == start else None
        yield from _walk(kids[i], level_path + (i,), con, sub)


def _strategy(n: int, min_degree: int, strategy: str) -> str:
    if strategy == "auto":
        return "complement" if min_degree > (n - 1) / 2 else "direct"
    if strategy not in ("direct", "complement"):
        raise GraphError(f"unknown strategy {strategy!r}")
    return strategy


def check_guard(n: int, min_degree: int):
    if not 1 <= n <= MAX_GENERATION_ORDER:
        raise GraphError(f"order {n} outside 1..{MAX_GENERATION_ORDER}")
    if not 0 <= min_degree < n:
        raise GraphError(f"min_degree {min_degree} outside 0..{n - 1}")


def tree_constraint(n: int, min_degree: int, strategy: str) -> Constraint:
    if strategy == "complement":
        return Constraint(n, 0, n - 1 - min_degree)
    return Constraint(n, min_degree, None)


def walk(n: int, min_degree: int = 0, strategy: str = "auto", cursor: tuple[int, ...] | None = None,
         root_path: tuple[int, ...] = ()) -> Iterator[tuple[tuple[int, ...], Graph]]:
    """Yield ``(path, graph)`` for every class, in tree order.

    ``root_path`` restricts the walk to one subtree; ``cursor`` (a full leaf
    path) skips every leaf up to and including it.
    """
    check_guard(n, min_degree)
    mode = _strategy(n, min_degree, strategy)
    con = tree_constraint(n, min_degree, mode)
    node = Graph.empty(1)
    for depth, i in enumerate(root_path):
        kids = children(node, con)
        if i >= len(kids):
            return
        node = kids[i]
    resume = None
    if cursor is not None:
        if tuple(cursor[:len(root_path)]) != tuple(root_path):
            raise GraphError("cursor lies outside the requested subtree")
        resume = tuple(cursor[len(root_path):])
    for p, g in _walk(node, tuple(root_path), con, resume):
        yield p, (complement(g) if mode == "complement" else g)


def generate(n: int, min_degree: int = 0, strategy: str = "auto",
             cursor: tuple[int, ...] | None = None) -> Iterator[Graph]:
    """One representative per isomorphism class of order ``n`` with minimum degree >= ``min_degree``."""
    for _, g in walk(n, min_degree, strategy, cursor):
        yield g


def generate_max_degree(n: int, max_degree: int) -> Iterator[Graph]:
    """One representative per class of order ``n`` with maximum degree <= ``max_degree``."""
    check_guard(n, 0)
    con = Constraint(n, 0, max_degree)
    for _, g in _walk(Graph.empty(1), (), con, None):
        yield g


def subtree_roots(n: int, min_degree: int, strategy: str = "auto", split_level: int = 6) -> list[tuple[int, ...]]:
    """Paths of the nodes at ``split_level`` (capped at ``n``), in tree order.

    Their subtrees partition the full output, so independent workers can take
    disjoint roots without any cross-worker deduplication.
    """
    check_guard(n, min_degree)
    mode = _strategy(n, min_degree, strategy)
    con = tree_constraint(n, min_degree, mode)
    level = min(split_level, n)
    roots: list[tuple[int, ...]] = []

    def rec(node: Graph, path: tuple[int, ...]):
        if node.n == level:
            roots.append(path)
            return
        for i, k in enumerate(children(node, con)):
            rec(k, path + (i,))

    rec(Graph.empty(1), ())
    return roots


# cursor files -------------------------------------------------------------

def format_cursor(n: int, min_degree: int, strategy: str, path: tuple[int, ...]) -> str:
    mode = _strategy(n, min_degree, strategy)
    return (f"minorbench-cursor 1\nn={n}\nmin_degree={min_degree}\nstrategy={mode}\n"
            f"path={','.join(map(str, path))}\n")


def parse_cursor(text: str) -> tuple[int, int, str, tuple[int, ...]]:
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if not lines or lines[0] != "minorbench-cursor 1":
        raise GraphError("not a minorbench cursor file")
    fields = dict(ln.split("=", 1) for ln in lines[1:])
    try:
        path = tuple(int(x) for x in fields["path"].split(",") if x)
        return int(fields["n"]), int(fields["min_degree"]), fields["strategy"], path
    except (KeyError, ValueError) as exc:
        raise GraphError(f"malformed cursor: {exc}") from exc
