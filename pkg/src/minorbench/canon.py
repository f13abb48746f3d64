"""Canonical labelling by equitable partition refinement and individualisation.

The search tree is the usual one: refine the ordered partition to an
equitable one, individualise each vertex of the first smallest non-singleton
cell in turn, and recurse.  Leaves are discrete partitions, i.e. labellings;
the certificate is the lexicographically smallest relabelled adjacency over
all leaves.  Automorphisms discovered at leaves prune children that lie in
the same orbit of the pointwise stabiliser of the current prefix.
"""

from __future__ import annotations

from typing import Sequence

from .graph import Graph, GraphError, MAX_ORDER, bits


def refine(adj: Sequence[int], cells: list[int], splitters: list[int] | None = None) -> list[int]:
    """Coarsest equitable refinement of the ordered partition ``cells`` (bitmasks).

    Fragments of a split cell are ordered by ascending neighbour count, so the
    result depends only on structure, never on vertex labels.
    """
    n = len(adj)
    cells = list(cells)
    queue = list(cells if splitters is None else splitters)
    while queue and len(cells) < n:
        w = queue.pop(0)
        out = []
        for c in cells:
            if c & (c - 1) == 0:
                out.append(c)
                continue
            groups: dict[int, int] = {}
            rest = c
            while rest:  # inlined bit loop, this is the hot path
                low = rest & -rest
                rest ^= low
                k = (adj[low.bit_length() - 1] & w).bit_count()
                groups[k] = groups.get(k, 0) | low
            if len(groups) == 1:
                out.append(c)
                continue
            frags = [groups[k] for k in sorted(groups)]
            out.extend(frags)
            if c in queue:
                queue.remove(c)
                queue.extend(frags)
            else:
                big = max(frags, key=lambda f: f.bit_count())
                queue.extend(f for f in frags if f != big)
        cells = out
    return cells


def degree_partition(g: Graph) -> list[int]:
    groups: dict[int, int] = {}
    for v, row in enumerate(g.adj):
        d = row.bit_count()
        groups[d] = groups.get(d, 0) | 1 << v
    return [groups[d] for d in sorted(groups)]


def individualise(cells: list[int], index: int, v: int) -> list[int]:
    c = cells[index]
    return cells[:index] + [1 << v, c & ~(1 << v)] + cells[index + 1:]


def _target(cells: list[int]) -> int:
    best, size = -1, MAX_ORDER + 1
    for i, c in enumerate(cells):
        k = c.bit_count()
        if 1 < k < size:
            best, size = i, k
            if k == 2:
                break
    return best


def _orbit_closure(seed: int, gens: list[tuple[int, ...]]) -> int:
    orbit = seed
    frontier = seed
    while frontier:
        nxt = 0
        for v in bits(frontier):
            for p in gens:
                nxt |= 1 << p[v]
        frontier = nxt & ~orbit
        orbit |= frontier
    return orbit


class _Search:
    def __init__(self, g: Graph):
        self.g = g
        self.adj = g.adj
        self.best_code: tuple[int, ...] | None = None
        self.best_order: list[int] | None = None
        self.first_code: tuple[int, ...] | None = None
        self.first_pos: list[int] | None = None
        self.best_pos: list[int] | None = None
        self.autos: list[tuple[int, ...]] = []

    def leaf(self, cells: list[int]):
        order = [c.bit_length() - 1 for c in cells]
        pos = [0] * len(order)
        for i, v in enumerate(order):
            pos[v] = i
        code = []
        for v in order:
            row = 0
            rest = self.adj[v]
            while rest:
                low = rest & -rest
                rest ^= low
                row |= 1 << pos[low.bit_length() - 1]
            code.append(row)
        code_t = tuple(code)
        if self.first_code is None:
            self.first_code, self.first_pos = code_t, pos
            self.best_code, self.best_order, self.best_pos = code_t, order, pos
            return
        for ref_code, ref_pos in ((self.first_code, self.first_pos), (self.best_code, self.best_pos)):
            if code_t == ref_code:
                inv = [0] * len(pos)
                for v, p in enumerate(ref_pos):
                    inv[p] = v
                self.autos.append(tuple(inv[pos[v]] for v in range(len(pos))))
                return
        if code_t < self.best_code:
            self.best_code, self.best_order, self.best_pos = code_t, order, pos

    def run(self, cells: list[int], prefix: list[int]):
        if len(cells) == self.g.n:
            self.leaf(cells)
            return
        t = _target(cells)
        tried = 0
        for v in bits(cells[t]):
            if tried:
                gens = [p for p in self.autos if all(p[u] == u for u in prefix)]
                if gens and _orbit_closure(tried, gens) >> v & 1:
                    continue
            tried |= 1 << v
            child = refine(self.adj, individualise(cells, t, v), [1 << v])
            self.run(child, prefix + [v])


def canonical_labeling(g: Graph, cells: list[int] | None = None) -> tuple[tuple[int, ...], list[int]]:
    """Return ``(code, order)``: the canonical adjacency rows and the vertex at each position.

    ``cells`` is an optional ordered colouring (bitmasks); colour-preserving
    relabellings then yield the same code.
    """
    if g.n > MAX_ORDER:
        raise GraphError(f"order {g.n} exceeds the canonical-form guard {MAX_ORDER}")
    if g.n == 0:
        return (), []
    start = [g.full_mask] if cells is None else [c for c in cells if c]
    code, order, _ = search_refined(g, refine(g.adj, start))
    return code, order


def search_refined(g: Graph, cells: list[int]) -> tuple[tuple[int, ...], list[int], list[tuple[int, ...]]]:
    """Search from an already equitable partition; also return the automorphisms met on the way."""
    s = _Search(g)
    s.run(cells, [])
    return s.best_code, s.best_order, s.autos


def orbit_of(v: int, gens: list[tuple[int, ...]]) -> int:
    """Orbit of ``v`` (as a bitmask) under the group generated by ``gens``."""
    return _orbit_closure(1 << v, gens)


def encode_certificate(n: int, code: Sequence[int], shape: Sequence[int] = ()) -> bytes:
    width = max(1, (n + 7) // 8)
    head = bytes([n, len(shape)]) + bytes(shape)
    return head + b"".join(row.to_bytes(width, "big") for row in code)


def canonical_form(g: Graph, cells: list[int] | None = None) -> bytes:
    """Certificate identifying the isomorphism class of ``g`` (or of the coloured graph)."""
    code, _ = canonical_labeling(g, cells)
    shape = () if cells is None else tuple(c.bit_count() for c in cells if c)
    return encode_certificate(g.n, code, shape)


def canonical_graph(g: Graph) -> Graph:
    code, _ = canonical_labeling(g)
    return Graph(g.n, code)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.edge_count() == h.edge_count() and canonical_form(g) == canonical_form(h)
