"""Exact colouring, Kempe chains and contraction-criticality checks."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

from .canon import canonical_form
from .graph import Graph, GraphError, MinorStep, bits, independence_number, max_clique, minor_step

COLORING_GUARD = 32
CRITICALITY_GUARD = 8


@dataclass(frozen=True)
class Coloring:
    colors: tuple[int, ...]

    @property
    def palette_size(self) -> int:
        return len(set(self.colors))

    def __len__(self) -> int:
        return len(self.colors)

    def __getitem__(self, v: int) -> int:
        return self.colors[v]


def _as_coloring(c: Coloring | Sequence[int]) -> Coloring:
    return c if isinstance(c, Coloring) else Coloring(tuple(c))


def is_proper(g: Graph, c: Coloring | Sequence[int]) -> bool:
    c = _as_coloring(c)
    if len(c) != g.n:
        raise GraphError(f"colouring has {len(c)} entries for a graph on {g.n} vertices")
    return all(c[u] != c[v] for u, v in g.edges())


def _dsatur_greedy(g: Graph, order_hint: list[int]) -> list[int]:
    colors = [-1] * g.n
    for v in order_hint:
        colors[v] = order_hint.index(v)
    while -1 in colors:
        v = max((x for x in range(g.n) if colors[x] == -1),
                key=lambda x: (len({colors[u] for u in bits(g.adj[x]) if colors[u] >= 0}), g.degree(x), -x))
        taken = {colors[u] for u in bits(g.adj[v])}
        colors[v] = next(k for k in range(g.n) if k not in taken)
    return colors


def chromatic_number(g: Graph, limit: int = COLORING_GUARD) -> tuple[int, Coloring]:
    """Exact chromatic number with a witness colouring.

    DSATUR branch and bound: a maximum clique is precoloured as the lower
    bound, a greedy DSATUR run gives the first upper bound.
    """
    if g.n > limit:
        raise GraphError(f"order {g.n} exceeds the colouring guard {limit}")
    if g.n == 0:
        return 0, Coloring(())
    clique = sorted(max_clique(g))
    lower = len(clique)
    best = _dsatur_greedy(g, clique)
    best_k = max(best) + 1
    if best_k == lower:
        return best_k, Coloring(tuple(best))

    colors = [-1] * g.n
    for i, v in enumerate(clique):
        colors[v] = i
    # sat[v][k]: number of coloured neighbours of v holding colour k
    sat = [[0] * g.n for _ in range(g.n)]
    for v in clique:
        for u in bits(g.adj[v]):
            sat[u][colors[v]] += 1
    state = {"best": best, "k": best_k}

    def pick() -> int:
        bestv, key = -1, None
        for x in range(g.n):
            if colors[x] != -1:
                continue
            s = sum(1 for k in sat[x] if k)
            kk = (s, sum(1 for u in bits(g.adj[x]) if colors[u] == -1), -x)
            if key is None or kk > key:
                bestv, key = x, kk
        return bestv

    def rec(used: int, left: int):
        if left == 0:
            state["best"], state["k"] = list(colors), used
            return
        v = pick()
        for k in range(min(used + 1, state["k"] - 1)):
            if sat[v][k]:
                continue
            colors[v] = k
            for u in bits(g.adj[v]):
                sat[u][k] += 1
            rec(max(used, k + 1), left - 1)
            for u in bits(g.adj[v]):
                sat[u][k] -= 1
            colors[v] = -1
            if state["k"] == lower:
                return

    rec(lower, g.n - lower)
    return state["k"], Coloring(tuple(state["best"]))


def kempe_component(g: Graph, c: Coloring | Sequence[int], v: int, a: int, b: int) -> frozenset[int]:
    """The component of the subgraph induced by colour classes ``a`` and ``b`` containing ``v``."""
    c = _as_coloring(c)
    if len(c) != g.n:
        raise GraphError("colouring length does not match graph order")
    if c[v] not in (a, b):
        raise GraphError(f"vertex {v} has colour {c[v]}, not {a} or {b}")
    allowed = 0
    for x in range(g.n):
        if c[x] in (a, b):
            allowed |= 1 << x
    return frozenset(bits(g.component_of(v, allowed)))


def kempe_swap(g: Graph, c: Coloring | Sequence[int], component: frozenset[int] | set[int],
               a: int, b: int) -> Coloring:
    """Exchange colours ``a`` and ``b`` on a Kempe component."""
    c = _as_coloring(c)
    comp = set(component)
    for x in comp:
        if c[x] not in (a, b):
            raise GraphError(f"vertex {x} in component is not coloured {a} or {b}")
        for u in bits(g.adj[x]):
            if c[u] in (a, b) and u not in comp:
                raise GraphError(f"component is not closed: edge {x}-{u} leaves it")
    swapped = tuple((b if col == a else a) if x in comp else col for x, col in enumerate(c.colors))
    return Coloring(swapped)


# contraction criticality --------------------------------------------------------

def proper_minor_steps(g: Graph) -> list[MinorStep]:
    steps = [MinorStep.delete_vertex(v) for v in range(g.n)]
    for u, v in g.edges():
        steps.append(MinorStep.delete_edge(u, v))
        steps.append(MinorStep.contract(u, v))
    return steps


def find_high_chromatic_minor(g: Graph, k: int, limit: int = CRITICALITY_GUARD) -> Graph | None:
    """A proper minor of ``g`` with chromatic number >= ``k``, or ``None``.

    Walks the whole minor lattice below ``g`` (deduplicated by canonical
    form): colourability is not monotone under contraction, so checking
    single steps is not enough.  Minors with fewer than ``k`` vertices or
    ``k(k-1)/2`` edges are not expanded, since neither count ever grows.
    """
    if g.n > limit:
        raise GraphError(f"order {g.n} exceeds the criticality guard {limit}")
    need_edges = k * (k - 1) // 2
    seen = {canonical_form(g)}
    queue = [g]
    while queue:
        cur = queue.pop()
        for step in proper_minor_steps(cur):
            m = minor_step(cur, step).graph
            if m.n < k or m.edge_count() < need_edges:
                continue
            cert = canonical_form(m)
            if cert in seen:
                continue
            seen.add(cert)
            if chromatic_number(m)[0] >= k:
                return m
            queue.append(m)
    return None


def is_contraction_critical(g: Graph, k: int, limit: int = CRITICALITY_GUARD) -> bool:
    if g.n > limit:
        raise GraphError(f"order {g.n} exceeds the criticality guard {limit}")
    if chromatic_number(g)[0] != k:
        return False
    return find_high_chromatic_minor(g, k, limit) is None


@dataclass(frozen=True)
class VertexRecord:
    vertex: int
    degree: int
    alpha: int
    bound: int  # d(x) - k + 2

    @property
    def ok(self) -> bool:
        return self.alpha <= self.bound


@dataclass(frozen=True)
class ProofProfile:
    """Necessary conditions for k-contraction-criticality, evaluated vertex by vertex.

    A failing record or a degree below ``k - 1`` shows the graph is not
    k-contraction-critical; passing everything proves nothing.
    """

    k: int
    order: int
    edges: int
    min_degree: int
    records: tuple[VertexRecord, ...]
    degree_counts: dict[int, int] = field(default_factory=dict)

    @property
    def violations(self) -> list[int]:
        return [r.vertex for r in self.records if not r.ok]

    @property
    def degree_violations(self) -> list[int]:
        return [r.vertex for r in self.records if r.degree < self.k - 1]

    @property
    def refutes_criticality(self) -> bool:
        return bool(self.violations or self.degree_violations)

    @property
    def edge_bound(self) -> int:
        return 6 * self.order - 20

    @property
    def min_degree_vertices_forced(self) -> int:
        """Lower bound on vertices of degree exactly δ: others have degree >= δ + 1."""
        return max(0, (self.min_degree + 1) * self.order - 2 * self.edges)

    def degree11_check(self) -> bool | None:
        """With δ = 11 and e <= 6n - 20, at least 40 vertices have degree 11.

        ``None`` when the hypotheses do not hold.
        """
        if self.min_degree != 11 or self.edges > self.edge_bound:
            return None
        forced = self.min_degree_vertices_forced
        return forced >= 40 and self.degree_counts.get(11, 0) >= forced


def criticality_profile(g: Graph, k: int) -> ProofProfile:
    records = []
    for x in range(g.n):
        nb = g.subgraph(g.adj[x])
        records.append(VertexRecord(x, g.degree(x), independence_number(nb), g.degree(x) - k + 2))
    counts = dict(sorted(Counter(g.degrees()).items()))
    return ProofProfile(k, g.n, g.edge_count(), g.min_degree(), tuple(records), counts)
