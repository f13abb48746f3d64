"""Vertex connectivity and vertex-disjoint path systems via unit-capacity flows.

Every vertex ``v`` is split into ``in(v) -> out(v)`` with capacity one; an
edge ``uv`` becomes ``out(u) -> in(v)`` and ``out(v) -> in(u)`` with
unbounded capacity.  Augmenting paths are found by breadth-first search that
scans neighbours in ascending index order, so paths and separators are
reproducible.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

from .graph import Graph, GraphError, bits

INF = 1 << 30

FULLY_DISJOINT = "disjoint"
COMMON_END = "fan"
INTERNAL = "internal"
LINKAGE = "linkage"


@dataclass(frozen=True)
class PathSystem:
    """Paths in a host graph.

    ``mode`` selects which pairs of paths must be vertex-disjoint:
    ``disjoint`` (all pairs), ``fan`` (all pairs, except the shared first
    vertex), ``internal`` (all pairs, except the shared two ends) or
    ``linkage`` (pairs whose four ends are distinct).
    """

    paths: tuple[tuple[int, ...], ...]
    ends: tuple[tuple[frozenset[int], frozenset[int]], ...]
    mode: str = FULLY_DISJOINT

    def __len__(self) -> int:
        return len(self.paths)


@dataclass(frozen=True)
class Separator:
    """Failure witness: deleting ``vertices`` leaves no path between the two sides."""

    vertices: frozenset[int]
    needed: int = field(default=0)

    def __len__(self) -> int:
        return len(self.vertices)


def validate_path_system(g: Graph, ps: PathSystem) -> bool:
    if len(ps.paths) != len(ps.ends):
        return False
    for p, (left, right) in zip(ps.paths, ps.ends):
        if not p or len(set(p)) != len(p):
            return False
        if any(not 0 <= v < g.n for v in p):
            return False
        if any(not g.has_edge(a, b) for a, b in zip(p, p[1:])):
            return False
        if p[0] not in left or p[-1] not in right:
            return False
    for i in range(len(ps.paths)):
        for j in range(i + 1, len(ps.paths)):
            a, b = ps.paths[i], ps.paths[j]
            shared = set(a) & set(b)
            if ps.mode == FULLY_DISJOINT:
                if shared:
                    return False
            elif ps.mode == COMMON_END:
                if shared != {a[0]} or a[0] != b[0]:
                    return False
            elif ps.mode == INTERNAL:
                if shared != {a[0], a[-1]} or (a[0], a[-1]) != (b[0], b[-1]):
                    return False
            elif ps.mode == LINKAGE:
                if len({a[0], a[-1], b[0], b[-1]}) == 4 and shared:
                    return False
            else:
                return False
    return True


def separates(g: Graph, sep: Iterable[int], a: Iterable[int], b: Iterable[int]) -> bool:
    """After deleting ``sep``, can no vertex of ``a`` reach a vertex of ``b``?"""
    gone = set(sep)
    sources = [v for v in a if v not in gone]
    targets = {v for v in b if v not in gone}
    seen = set(sources)
    stack = list(sources)
    while stack:
        x = stack.pop()
        if x in targets:
            return False
        for y in g.neighbors(x):
            if y not in gone and y not in seen:
                seen.add(y)
                stack.append(y)
    return True


class _Flow:
    """Residual network over the split digraph of ``g``; node ids ``2v`` (in) and ``2v+1`` (out)."""

    def __init__(self, g: Graph, vertex_cap: dict[int, int] | None = None, banned: int = 0):
        self.g = g
        self.size = 2 * g.n + 2
        self.src, self.dst = 2 * g.n, 2 * g.n + 1
        self.cap: list[dict[int, int]] = [dict() for _ in range(self.size)]
        self.banned = banned
        vertex_cap = vertex_cap or {}
        for v in range(g.n):
            if banned >> v & 1:
                continue
            self._arc(2 * v, 2 * v + 1, vertex_cap.get(v, 1))
            for u in bits(g.adj[v] & ~banned):
                self._arc(2 * v + 1, 2 * u, INF)

    def _arc(self, a: int, b: int, c: int):
        self.cap[a][b] = self.cap[a].get(b, 0) + c
        self.cap[b].setdefault(a, 0)

    def add_source(self, v: int, c: int = 1):
        self._arc(self.src, 2 * v, c)

    def add_sink(self, v: int, c: int = 1):
        self._arc(2 * v + 1, self.dst, c)

    def _augment(self) -> bool:
        prev = [-1] * self.size
        prev[self.src] = self.src
        q = deque([self.src])
        while q:
            a = q.popleft()
            if a == self.dst:
                break
            for b in sorted(self.cap[a]):
                if prev[b] == -1 and self.cap[a][b] > 0:
                    prev[b] = a
                    q.append(b)
        if prev[self.dst] == -1:
            return False
        b = self.dst
        while b != self.src:
            a = prev[b]
            self.cap[a][b] -= 1
            self.cap[b][a] += 1
            b = a
        return True

    def run(self, limit: int = INF) -> int:
        flow = 0
        while flow < limit and self._augment():
            flow += 1
        return flow

    def min_cut_vertices(self) -> frozenset[int]:
        seen = {self.src}
        q = deque([self.src])
        while q:
            a = q.popleft()
            for b, c in self.cap[a].items():
                if c > 0 and b not in seen:
                    seen.add(b)
                    q.append(b)
        return frozenset(v for v in range(self.g.n) if 2 * v in seen and 2 * v + 1 not in seen)

    def paths(self) -> list[tuple[int, ...]]:
        """Decompose the current flow into simple source-to-sink vertex sequences."""
        flow_on = self._flow_matrix()
        out = []
        while any(c > 0 for c in flow_on[self.src].values()):
            a = self.src
            nodes: list[int] = []
            while a != self.dst:
                nxt = min(b for b, c in flow_on[a].items() if c > 0)
                flow_on[a][nxt] -= 1
                a = nxt
                if a < 2 * self.g.n and a % 2 == 0:
                    v = a // 2
                    if v in nodes:  # only unbounded-capacity hubs can repeat
                        del nodes[nodes.index(v) + 1:]
                    else:
                        nodes.append(v)
            out.append(tuple(nodes))
        return out

    def _flow_matrix(self) -> list[dict[int, int]]:
        flow_on: list[dict[int, int]] = [dict() for _ in range(self.size)]
        for a in range(self.size):
            for b in self.cap[a]:
                f = self.orig.get((a, b), 0) - self.cap[a][b]
                if f > 0:
                    flow_on[a][b] = f
        return flow_on

    def snapshot(self):
        self.orig = {(a, b): c for a in range(self.size) for b, c in self.cap[a].items()}


def local_connectivity(g: Graph, s: int, t: int, limit: int = INF) -> tuple[int, frozenset[int]]:
    """Max number of internally disjoint s-t paths (s, t nonadjacent) and a minimum separator."""
    if g.has_edge(s, t) or s == t:
        raise GraphError("local connectivity needs distinct nonadjacent terminals")
    f = _Flow(g, {s: INF, t: INF})
    f.add_source(s, INF)
    f.add_sink(t, INF)
    k = f.run(limit)
    return k, f.min_cut_vertices()


def _connectivity(g: Graph) -> tuple[int, frozenset[int] | None]:
    n = g.n
    if n <= 1:
        return 0, None
    if g.edge_count() == n * (n - 1) // 2:
        return n - 1, None
    if not g.is_connected():
        return 0, frozenset()
    v = min(range(n), key=lambda x: (g.degree(x), x))
    best, witness = g.degree(v), frozenset(g.neighbors(v))
    pairs = [(v, u) for u in range(n) if u != v and not g.has_edge(u, v)]
    nb = g.neighbors(v)
    pairs += [(x, y) for i, x in enumerate(nb) for y in nb[i + 1:] if not g.has_edge(x, y)]
    for a, b in pairs:
        k, cut = local_connectivity(g, a, b, best)
        if k < best:
            best, witness = k, cut
    return best, witness


def vertex_connectivity(g: Graph) -> int:
    """Fewest vertices whose deletion disconnects ``g`` or leaves one vertex."""
    return _connectivity(g)[0]


def min_vertex_separator(g: Graph) -> frozenset[int] | None:
    """A minimum separating vertex set, or ``None`` for complete graphs."""
    return _connectivity(g)[1]


def _trim(path: tuple[int, ...], start: set[int], stop: set[int]) -> tuple[int, ...]:
    j = next(i for i, v in enumerate(path) if v in stop)
    i = max(i for i in range(j + 1) if path[i] in start)
    return path[i:j + 1]


def disjoint_paths(g: Graph, a: Iterable[int], b: Iterable[int], k: int,
                   mode: str = FULLY_DISJOINT) -> PathSystem | Separator:
    """``k`` disjoint A-B paths, or a separator with fewer than ``k`` vertices.

    In ``fan`` mode ``a`` must be a single hub vertex outside ``b``; the paths
    then share only that hub.  In ``internal`` mode ``a`` and ``b`` are single
    nonadjacent vertices joined by internally disjoint paths.  Every returned path meets ``a`` only in its
    first vertex and ``b`` only in its last.
    """
    A, B = set(a), set(b)
    for v in A | B:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} outside 0..{g.n - 1}")
    if k < 0:
        raise GraphError("k must be nonnegative")
    if mode == COMMON_END:
        if len(A) != 1:
            raise GraphError("fan mode needs exactly one hub vertex")
        (x,) = A
        if x in B:
            raise GraphError("fan hub must lie outside the target set")
        if k > len(B):
            raise GraphError(f"cannot route {k} paths to {len(B)} targets")
        f = _Flow(g, {x: INF})
        f.add_source(x, INF)
        for v in sorted(B):
            f.add_sink(v)
        f.snapshot()
        got = f.run(k)
        if got < k:
            return Separator(f.min_cut_vertices(), k)
        paths = [_trim(p, {x}, B) for p in f.paths()]
        paths.sort()
        return PathSystem(tuple(paths), tuple((frozenset(A), frozenset(B)) for _ in paths), COMMON_END)
    if mode == INTERNAL:
        if len(A) != 1 or len(B) != 1:
            raise GraphError("internal mode needs single terminals")
        (x,), (y,) = A, B
        if x == y or g.has_edge(x, y):
            raise GraphError("internal mode needs distinct nonadjacent terminals")
        f = _Flow(g, {x: INF, y: INF})
        f.add_source(x, INF)
        f.add_sink(y, INF)
        f.snapshot()
        if f.run(k) < k:
            return Separator(f.min_cut_vertices(), k)
        paths = sorted(_trim(p, A, B) for p in f.paths())
        return PathSystem(tuple(paths), tuple((frozenset(A), frozenset(B)) for _ in paths), INTERNAL)
    if mode != FULLY_DISJOINT:
        raise GraphError(f"unknown path mode {mode!r}")
    if k > min(len(A), len(B)):
        raise GraphError(f"cannot route {k} disjoint paths between sets of sizes {len(A)} and {len(B)}")
    common = sorted(A & B)
    trivial = [(v,) for v in common[:k]]
    need = k - len(trivial)
    X = set(common)
    banned = 0
    for v in X:
        banned |= 1 << v
    rest_a, rest_b = A - X, B - X
    found: list[tuple[int, ...]] = []
    if need:
        f = _Flow(g, banned=banned)
        for v in sorted(rest_a):
            f.add_source(v)
        for v in sorted(rest_b):
            f.add_sink(v)
        f.snapshot()
        got = f.run(need)
        if got < need:
            return Separator(frozenset(X) | f.min_cut_vertices(), k)
        found = sorted(_trim(p, A, B) for p in f.paths())
    paths = trivial + found
    return PathSystem(tuple(paths), tuple((frozenset(A), frozenset(B)) for _ in paths), FULLY_DISJOINT)
