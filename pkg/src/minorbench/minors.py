"""Exact minor containment with branch-set certificates.

``has_minor`` backtracks over the vertices of ``H``, choosing for each a
connected branch set in ``G``.  Candidate sets are enumerated smallest
first, anchored at vertices in descending ``G``-degree order, and pruned by

* vertex supply: enough free vertices remain for the unplaced ``H``-vertices;
* contact supply: every placed branch set has at least as many free
  neighbours as it still has unplaced ``H``-neighbours;
* contraction budget: an unplaced ``H``-vertex with no free vertex adjacent
  to all of its placed neighbours needs a branch set of two or more, and the
  total overshoot is bounded by the spare vertex count;
* reachability: such a vertex must have a free component touching all of
  its placed neighbours.

Before searching, the host is split along clique separators smaller than
the connectivity of ``H``: a model of such an ``H`` cannot straddle one, so
each side is searched separately.

Twin vertices of ``H`` are interchangeable, so their branch sets are forced
into increasing anchor order.  ``brute_minor_oracle`` shares none of this:
it enumerates every partition of a vertex subset into connected blocks and
tests the quotient for a spanning copy of ``H``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .connectivity import vertex_connectivity
from .graph import Graph, GraphError, bits, cliques_of_size, kt_doubleminus


@dataclass(frozen=True)
class BranchModel:
    """``branch_sets[h]`` is the set of ``G``-vertices contracted onto ``H``-vertex ``h``."""

    branch_sets: tuple[frozenset[int], ...]

    def describe(self) -> str:
        return " | ".join(",".join(map(str, sorted(b))) for b in self.branch_sets)

    @classmethod
    def parse(cls, text: str) -> "BranchModel":
        parts = [p.strip() for p in text.split("|")]
        return cls(tuple(frozenset(int(x) for x in p.split(",") if x.strip()) for p in parts))


def check_model(g: Graph, h: Graph, model: BranchModel) -> bool:
    """Validate a branch model directly against its definition."""
    sets = model.branch_sets
    if len(sets) != h.n:
        return False
    owner: dict[int, int] = {}
    for i, b in enumerate(sets):
        if not b:
            return False
        for v in b:
            if not isinstance(v, int) or not 0 <= v < g.n or v in owner:
                return False
            owner[v] = i
    for b in sets:
        start = next(iter(b))
        seen = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in b:
                if y not in seen and g.has_edge(x, y):
                    seen.add(y)
                    stack.append(y)
        if seen != set(b):
            return False
    for a, c in h.edges():
        if not any(g.has_edge(x, y) for x in sets[a] for y in sets[c]):
            return False
    return True


# main search ----------------------------------------------------------------

def _twin_classes(h: Graph) -> list[int]:
    """``leader[v]``: previous member of v's twin class in index order, or -1."""
    leader = [-1] * h.n
    last: dict[tuple[str, int], int] = {}
    closed = {}
    for v in range(h.n):
        closed.setdefault(h.adj[v] | 1 << v, []).append(v)
    in_true = set()
    for group in closed.values():
        if len(group) > 1:
            in_true.update(group)
    for v in range(h.n):
        key = ("c", h.adj[v] | 1 << v) if v in in_true else ("o", h.adj[v])
        if key in last:
            leader[v] = last[key]
        last[key] = v
    return leader


def _h_order(h: Graph) -> list[int]:
    order: list[int] = []
    placed = 0
    left = set(range(h.n))
    while left:
        v = min(left, key=lambda x: (-(h.adj[x] & placed).bit_count(), -h.degree(x), x))
        order.append(v)
        placed |= 1 << v
        left.remove(v)
    return order


class _MinorSearch:
    def __init__(self, g: Graph, h: Graph):
        self.g = g
        self.h = h
        self.adj = g.adj
        self.order = _h_order(h)
        pos = {v: i for i, v in enumerate(self.order)}
        self.pos = pos
        # twin constraints along the search order
        leader = _twin_classes(h)
        groups: dict[int, list[int]] = {}
        for v in range(h.n):
            root = v
            while leader[root] != -1:
                root = leader[root]
            groups.setdefault(root, []).append(v)
        self.twin_prev = [-1] * h.n
        for members in groups.values():
            members.sort(key=lambda v: pos[v])
            for a, b in zip(members, members[1:]):
                self.twin_prev[b] = a
        self.earlier = [
            [u for u in h.neighbors(v) if pos[u] < pos[v]] for v in range(h.n)
        ]
        # rank: descending G-degree, ties by index
        by_rank = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
        self.rank = [0] * g.n
        for r, v in enumerate(by_rank):
            self.rank[v] = r
        self.by_rank = by_rank
        self.higher = [0] * g.n  # vertices of strictly larger rank
        acc = 0
        for v in reversed(by_rank):
            self.higher[v] = acc
            acc |= 1 << v
        self.sets: list[int] = [0] * h.n
        self.touch: list[int] = [0] * h.n
        self.anchor = [-1] * h.n
        self._prepare_stages()

    def _connected_sets(self, allowed: int, k: int, min_rank: int) -> Iterator[tuple[int, int]]:
        adj = self.adj
        for v in self.by_rank[min_rank:]:
            if not allowed >> v & 1:
                continue
            if k == 1:
                yield 1 << v, v
                continue
            later = allowed & self.higher[v]
            yield from ((s, v) for s in self._extend(1 << v, adj[v] & later, later, adj[v] | 1 << v, k))

    def _extend(self, sub: int, ext: int, later: int, nbhd: int, k: int) -> Iterator[int]:
        if sub.bit_count() == k:
            yield sub
            return
        adj = self.adj
        while ext:
            w = (ext & -ext).bit_length() - 1
            ext &= ~(1 << w)
            new_ext = ext | (adj[w] & later & ~nbhd)
            yield from self._extend(sub | 1 << w, new_ext & ~(sub | 1 << w), later, nbhd | adj[w] | 1 << w, k)

    def _prepare_stages(self):
        h, order, pos = self.h, self.order, self.pos
        self.stage_placed_need = []
        self.stage_unplaced_req = []
        for i in range(len(order)):
            placed = order[:i + 1]
            unplaced_mask = 0
            for u in order[i + 1:]:
                unplaced_mask |= 1 << u
            self.stage_placed_need.append(
                [(p, (h.adj[p] & unplaced_mask).bit_count()) for p in placed if h.adj[p] & unplaced_mask])
            self.stage_unplaced_req.append(
                [[p for p in self.earlier[u] if pos[p] <= i] for u in order[i + 1:]])

    def _feasible(self, i: int, free: int, spare: int) -> bool:
        touch = self.touch
        for p, need in self.stage_placed_need[i]:
            if (touch[p] & free).bit_count() < need:
                return False
        singles = 0
        extras = 0
        hard = []
        for req in self.stage_unplaced_req[i]:
            pool = free
            for p in req:
                pool &= touch[p]
            if pool:
                singles |= pool
            else:
                extras += 1
                if extras > spare:
                    return False
                hard.append(req)
        unplaced = len(self.stage_unplaced_req[i])
        if unplaced - extras > singles.bit_count() + spare - extras:
            return False
        if hard:
            comps = self.g.components(free)
            for req in hard:
                if not any(all(c & touch[p] for p in req) for c in comps):
                    return False
        return True

    def run(self, i: int, free: int, spare: int) -> bool:
        if i == len(self.order):
            return True
        hv = self.order[i]
        adj = self.adj
        touch = self.touch
        req = [touch[u] & free for u in self.earlier[hv]]
        common = free
        for r in req:
            if not r:
                return False
            common &= r
        prev = self.twin_prev[hv]
        min_rank = self.rank[self.anchor[prev]] + 1 if prev != -1 else 0
        for k in range(1, spare + 2):
            for s, anchor in self._connected_sets(common if k == 1 else free, k, min_rank):
                if k > 1 and any(not (s & r) for r in req):
                    continue
                t = 0
                for x in bits(s):
                    t |= adj[x]
                self.sets[hv] = s
                self.touch[hv] = t
                self.anchor[hv] = anchor
                nfree = free & ~s
                left = spare - (k - 1)
                if self._feasible(i, nfree, left) and self.run(i + 1, nfree, left):
                    return True
        self.sets[hv] = 0
        self.touch[hv] = 0
        self.anchor[hv] = -1
        return False


def separation_threshold(h: Graph) -> int:
    """Largest ``s`` such that ``h`` has no vertex separator of size <= ``s``.

    A complete graph has no separator at all, so its threshold is its order.
    """
    n = h.n
    if h.edge_count() == n * (n - 1) // 2:
        return n
    return vertex_connectivity(h) - 1


def find_clique_separator(g: Graph, max_size: int) -> tuple[int, list[int]] | None:
    """Smallest, then lexicographically first, clique ``S`` with ``|S| <= max_size`` and ``g - S`` disconnected.

    Returns ``(S, components of g - S)`` as bitmasks.
    """
    for size in range(0, min(max_size, g.n - 2) + 1):
        for clique in cliques_of_size(g, size):
            comps = g.components(g.full_mask & ~clique)
            if len(comps) > 1:
                return clique, comps
    return None


def _search(g: Graph, h: Graph, threshold: int) -> BranchModel | None:
    if h.n > g.n or h.edge_count() > g.edge_count():
        return None
    if threshold >= 0 and g.n - h.n >= DECOMPOSE_MIN_SPARE:
        split = find_clique_separator(g, threshold)
        if split is not None:
            clique, comps = split
            # a model of a graph with no separator of size <= |S| lives on one side
            for comp in comps:
                side = comp | clique
                if side.bit_count() < h.n:
                    continue
                sub = g.subgraph(side)
                m = _search(sub, h, threshold)
                if m is not None:
                    back = list(bits(side))
                    return BranchModel(tuple(frozenset(back[x] for x in b) for b in m.branch_sets))
            return None
    s = _MinorSearch(g, h)
    if not s.run(0, g.full_mask, g.n - h.n):
        return None
    return BranchModel(tuple(frozenset(bits(m)) for m in s.sets))


DECOMPOSE_MIN_SPARE = 4  # below this the plain search is cheaper than finding separators


def has_minor(g: Graph, h: Graph, decompose: bool = True) -> BranchModel | None:
    """A branch model of ``h`` in ``g``, or ``None`` when ``g`` has no ``h`` minor.

    With ``decompose`` the host is first split along small clique separators
    (those smaller than any separator of ``h``), and each side is searched on
    its own.
    """
    if h.n == 0:
        return BranchModel(())
    threshold = separation_threshold(h) if decompose and h.n > 1 else -1
    model = _search(g, h, threshold)
    if model is not None:
        assert check_model(g, h, model), "minor search produced an invalid model"
    return model


def has_kt_doubleminus_minor(g: Graph, t: int, decompose: bool = True) -> tuple[int, BranchModel] | None:
    """``(variant, model)`` for the first K_t^= variant found (0 = disjoint, 1 = shared end)."""
    for idx, target in enumerate(kt_doubleminus(t)):
        m = has_minor(g, target, decompose)
        if m is not None:
            return idx, m
    return None


def has_k9eq_minor(g: Graph) -> tuple[int, BranchModel] | None:
    return has_kt_doubleminus_minor(g, 9)


# independent oracle -----------------------------------------------------------

ORACLE_MAX_G = 9
ORACLE_MAX_H = 7


def _embeds_spanning(h: Graph, q_adj: Sequence[int]) -> bool:
    """Is there a bijection V(h) -> V(q) carrying every h-edge onto a q-edge?"""
    k = h.n
    order = sorted(range(k), key=lambda v: -h.degree(v))
    image = [-1] * k
    used = [False] * k

    def place(i: int) -> bool:
        if i == k:
            return True
        v = order[i]
        for c in range(k):
            if used[c]:
                continue
            if q_adj[c].bit_count() < h.degree(v):
                continue
            ok = True
            for u in order[:i]:
                if h.has_edge(u, v) and not q_adj[c] >> image[u] & 1:
                    ok = False
                    break
            if ok:
                used[c] = True
                image[v] = c
                if place(i + 1):
                    return True
                used[c] = False
        return False

    return place(0)


def _block_connected(g: Graph, members: list[int]) -> bool:
    seen = {members[0]}
    stack = [members[0]]
    pool = set(members)
    while stack:
        x = stack.pop()
        for y in g.neighbors(x):
            if y in pool and y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(members)


def brute_minor_oracle(g: Graph, h: Graph) -> bool:
    """Decide ``g >= h`` by enumerating all partitions of vertex subsets into |h| connected blocks."""
    if g.n > ORACLE_MAX_G or h.n > ORACLE_MAX_H:
        raise GraphError(f"oracle guard exceeded: |G| <= {ORACLE_MAX_G}, |H| <= {ORACLE_MAX_H}")
    k = h.n
    if k == 0:
        return True
    need_edges = h.edge_count()
    label = [-1] * g.n

    def finish() -> bool:
        blocks: list[list[int]] = [[] for _ in range(k)]
        for v, b in enumerate(label):
            if b >= 0:
                blocks[b].append(v)
        if not all(_block_connected(g, b) for b in blocks):
            return False
        q = [0] * k
        for u, v in g.edges():
            a, b = label[u], label[v]
            if a >= 0 and b >= 0 and a != b:
                q[a] |= 1 << b
                q[b] |= 1 << a
        if sum(x.bit_count() for x in q) // 2 < need_edges:
            return False
        return _embeds_spanning(h, q)

    def assign(v: int, used_blocks: int) -> bool:
        if v == g.n:
            return used_blocks == k and finish()
        if g.n - v > k - used_blocks:
            label[v] = -1
            if assign(v + 1, used_blocks):
                return True
        for b in range(used_blocks):
            label[v] = b
            if assign(v + 1, used_blocks):
                return True
        if used_blocks < k:
            label[v] = used_blocks
            if assign(v + 1, used_blocks + 1):
                return True
        label[v] = -1
        return False

    return assign(0, 0)
