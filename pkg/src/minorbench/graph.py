"""Immutable simple graphs on at most 64 vertices, stored as neighbour bitmasks.

Vertex ``v`` is adjacent to ``u`` iff bit ``u`` of ``adj[v]`` is set.  Every
operation returns a new :class:`Graph`; nothing mutates in place, so graphs
can be handed to worker processes freely.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, NamedTuple, Sequence

MAX_ORDER = 64


class GraphError(ValueError):
    """Raised for invalid vertices, edges or guard violations."""


class Graph6Error(GraphError):
    """Malformed graph6 input; ``offset`` is the byte position of the fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_ORDER:
            raise GraphError(f"order {self.n} outside 0..{MAX_ORDER}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match order")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full or row >> v & 1:
                raise GraphError(f"bad adjacency row for vertex {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    # construction -----------------------------------------------------

    @classmethod
    def _trusted(cls, n: int, adj: tuple[int, ...]) -> "Graph":
        """Skip validation; for adjacency built by this package from a valid graph."""
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v or not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"invalid edge ({u}, {v}) for order {n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    # accessors --------------------------------------------------------

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def __len__(self) -> int:
        return self.n

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def closed_neighborhood(self, v: int) -> int:
        return self.adj[v] | 1 << v

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def is_clique(self, mask: int) -> bool:
        return all(mask & ~(self.adj[v] | 1 << v) == 0 for v in bits(mask))

    def is_independent(self, mask: int) -> bool:
        return all(self.adj[v] & mask == 0 for v in bits(mask))

    def component_of(self, v: int, within: int | None = None) -> int:
        """Bitmask of the component containing ``v`` inside the vertex set ``within``."""
        allowed = self.full_mask if within is None else within
        seen = frontier = 1 << v
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= self.adj[u]
            frontier = nxt & allowed & ~seen
            seen |= frontier
        return seen

    def components(self, within: int | None = None) -> list[int]:
        rest = self.full_mask if within is None else within
        comps = []
        while rest:
            c = self.component_of((rest & -rest).bit_length() - 1, rest)
            comps.append(c)
            rest &= ~c
        return comps

    def is_connected(self, within: int | None = None) -> bool:
        mask = self.full_mask if within is None else within
        if not mask:
            return True
        return self.component_of((mask & -mask).bit_length() - 1, mask) == mask

    def subgraph(self, mask: int) -> "Graph":
        """Induced subgraph on the vertices of ``mask``, relabelled in ascending order."""
        verts = list(bits(mask))
        pos = {v: i for i, v in enumerate(verts)}
        adj = []
        for v in verts:
            row = 0
            for u in bits(self.adj[v] & mask):
                row |= 1 << pos[u]
            adj.append(row)
        return Graph(len(verts), tuple(adj))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph in which old vertex ``v`` becomes ``perm[v]``."""
        adj = [0] * self.n
        for v in range(self.n):
            row = 0
            for u in bits(self.adj[v]):
                row |= 1 << perm[u]
            adj[perm[v]] = row
        return Graph(self.n, tuple(adj))

    def add_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        return Graph.from_edges(self.n, list(self.edges()) + list(edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, e={self.edge_count()}, g6={to_graph6(self)!r})" if self.n else "Graph(n=0)"


# graph6 ---------------------------------------------------------------

_HEADER = ">>graph6<<"


def _encode_order(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr((n >> s & 63) + 63) for s in (12, 6, 0))
    raise GraphError(f"order {n} too large for graph6")


def to_graph6(g: Graph) -> str:
    out = [_encode_order(g.n)]
    acc = nbits = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def from_graph6(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("latin-1")
    base = 0
    s = text.rstrip("\r\n")
    if s.startswith(_HEADER):
        base = len(_HEADER)
    for i in range(base, len(s)):
        if not 63 <= ord(s[i]) <= 126:
            raise Graph6Error(f"non-printable or out-of-range byte {ord(s[i])!r}", i)
    if base >= len(s):
        raise Graph6Error("missing order prefix", base)
    pos = base
    if s[pos] != "~":
        n = ord(s[pos]) - 63
        pos += 1
    elif pos + 1 < len(s) and s[pos + 1] == "~":
        if pos + 8 > len(s):
            raise Graph6Error("truncated 8-byte order prefix", pos)
        n = 0
        for c in s[pos + 2:pos + 8]:
            n = n << 6 | (ord(c) - 63)
        pos += 8
    else:
        if pos + 4 > len(s):
            raise Graph6Error("truncated 4-byte order prefix", pos)
        n = 0
        for c in s[pos + 1:pos + 4]:
            n = n << 6 | (ord(c) - 63)
        if n <= 62:
            raise Graph6Error("non-canonical long order prefix", pos)
        pos += 4
    if n > MAX_ORDER:
        raise Graph6Error(f"order {n} exceeds the {MAX_ORDER}-vertex guard", base)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = s[pos:]
    if len(body) != need:
        raise Graph6Error(f"expected {need} data bytes for order {n}, found {len(body)}", pos + min(len(body), need))
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(body[k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    if nbits % 6:
        tail = ord(body[-1]) - 63
        if tail & ((1 << (6 - nbits % 6)) - 1):
            raise Graph6Error("padding bits are not zero", pos + need - 1)
    return Graph(n, tuple(adj))


# minor steps -------------------------------------------------------------

@dataclass(frozen=True)
class MinorStep:
    kind: str  # "delete-vertex" | "delete-edge" | "contract-edge"
    u: int
    v: int | None = None

    @classmethod
    def delete_vertex(cls, v: int) -> "MinorStep":
        return cls("delete-vertex", v)

    @classmethod
    def delete_edge(cls, u: int, v: int) -> "MinorStep":
        return cls("delete-edge", u, v)

    @classmethod
    def contract(cls, u: int, v: int) -> "MinorStep":
        return cls("contract-edge", u, v)


class StepResult(NamedTuple):
    graph: Graph
    index_map: tuple[int | None, ...]  # old vertex -> new vertex (None if deleted)


def _drop_vertex(g: Graph, v: int) -> Graph:
    low = (1 << v) - 1
    adj = []
    for w in range(g.n):
        if w == v:
            continue
        row = g.adj[w]
        adj.append((row & low) | (row >> (v + 1) << v))
    return Graph(g.n - 1, tuple(adj))


def minor_step(g: Graph, step: MinorStep) -> StepResult:
    """Apply one vertex deletion, edge deletion or edge contraction."""
    u, v = step.u, step.v
    if not 0 <= u < g.n or (v is not None and not 0 <= v < g.n):
        raise GraphError(f"step {step} references a vertex outside 0..{g.n - 1}")
    if step.kind == "delete-vertex":
        mapping = tuple(None if w == u else (w if w < u else w - 1) for w in range(g.n))
        return StepResult(_drop_vertex(g, u), mapping)
    if v is None or not g.has_edge(u, v):
        raise GraphError(f"step {step} needs an existing edge")
    if step.kind == "delete-edge":
        adj = list(g.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return StepResult(Graph(g.n, tuple(adj)), tuple(range(g.n)))
    if step.kind != "contract-edge":
        raise GraphError(f"unknown step kind {step.kind!r}")
    keep, gone = min(u, v), max(u, v)
    merged = (g.adj[keep] | g.adj[gone]) & ~(1 << keep | 1 << gone)
    adj = []
    for w, row in enumerate(g.adj):
        row &= ~(1 << gone)
        if merged >> w & 1:
            row |= 1 << keep
        adj.append(row)
    adj[keep] = merged
    adj[gone] = 0
    joined = Graph(g.n, tuple(adj))  # ``gone`` is now isolated
    mapping = tuple(keep if w == gone else (w if w < gone else w - 1) for w in range(g.n))
    return StepResult(_drop_vertex(joined, gone), mapping)


# elementary constructions -------------------------------------------------

def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


class Induced(NamedTuple):
    graph: Graph
    vertices: tuple[int, ...]  # new index i corresponds to original vertex vertices[i]


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Induced:
    vs = sorted(set(vertices))
    for v in vs:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} outside 0..{g.n - 1}")
    return Induced(g.subgraph(mask_of(vs)), tuple(vs))


def is_same_labelled(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.adj == h.adj


# cliques and independent sets -----------------------------------------------


def max_clique(g: Graph, limit: int = MAX_ORDER) -> frozenset[int]:
    """A maximum clique, by branch and bound with a greedy-colouring bound."""
    if g.n > limit:
        raise GraphError(f"order {g.n} exceeds clique guard {limit}")
    best = [0, 0]  # size, mask

    def colour_bound(cand: int) -> list[tuple[int, int]]:
        # greedy sequential colouring; returns (vertex, colour number) in order
        order = []
        k = 0
        rest = cand
        while rest:
            k += 1
            avail = rest
            while avail:
                v = (avail & -avail).bit_length() - 1
                avail &= ~(1 << v) & ~g.adj[v]
                rest &= ~(1 << v)
                order.append((v, k))
        return order

    def expand(cur: int, size: int, cand: int):
        order = colour_bound(cand)
        for v, k in reversed(order):
            if size + k <= best[0]:
                return
            nxt = cur | 1 << v
            sub = cand & g.adj[v]
            if sub:
                expand(nxt, size + 1, sub)
            elif size + 1 > best[0]:
                best[0], best[1] = size + 1, nxt
            cand &= ~(1 << v)

    if g.n:
        expand(0, 0, g.full_mask)
    return frozenset(bits(best[1]))


def clique_number(g: Graph) -> int:
    return len(max_clique(g))


def max_independent_set(g: Graph, limit: int = MAX_ORDER) -> frozenset[int]:
    if g.n > limit:
        raise GraphError(f"order {g.n} exceeds independence guard {limit}")
    return max_clique(complement(g), limit)


def independence_number(g: Graph, limit: int = MAX_ORDER) -> int:
    return len(max_independent_set(g, limit))


def cliques_of_size(g: Graph, k: int, within: int | None = None) -> Iterator[int]:
    """All k-cliques as bitmasks, in lexicographic order of their sorted vertex tuples."""
    allowed = g.full_mask if within is None else within

    def rec(cur: int, cand: int, need: int):
        if need == 0:
            yield cur
            return
        while cand and cand.bit_count() >= need:
            v = (cand & -cand).bit_length() - 1
            cand &= ~(1 << v)
            yield from rec(cur | 1 << v, cand & g.adj[v], need - 1)

    yield from rec(0, allowed, k)


# named graphs --------------------------------------------------------------

def complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_multipartite(*parts: int) -> Graph:
    """Parts occupy consecutive index blocks, in the order given."""
    label = []
    for p, size in enumerate(parts):
        label += [p] * size
    n = len(label)
    return Graph.from_edges(n, [(u, v) for u, v in combinations(range(n), 2) if label[u] != label[v]])


def kt_minus(t: int) -> Graph:
    """K_t with the edge {0, 1} removed."""
    if t < 2:
        raise GraphError("K_t^- needs t >= 2")
    return Graph.from_edges(t, [e for e in combinations(range(t), 2) if e != (0, 1)])


def kt_doubleminus(t: int) -> tuple[Graph, Graph]:
    """Both members of the K_t^= family.

    Index 0 misses the disjoint edges {0,1} and {2,3}; index 1 misses {0,1}
    and {0,2}, which share the end 0.
    """
    if t < 4:
        raise GraphError("K_t^= needs t >= 4 so both variants exist")
    full = list(combinations(range(t), 2))
    disjoint = Graph.from_edges(t, [e for e in full if e not in ((0, 1), (2, 3))])
    shared = Graph.from_edges(t, [e for e in full if e not in ((0, 1), (0, 2))])
    return disjoint, shared


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def named_graph(spec: str) -> Graph | tuple[Graph, Graph]:
    """Parse ``complete(n)``, ``cycle(n)``, ``path(n)``, ``complete_multipartite(a,b,...)``,
    ``kt_minus(t)``, ``kt_doubleminus(t)``, ``petersen`` or ``empty(n)``."""
    text = spec.replace(" ", "")
    name, _, rest = text.partition("(")
    args = [int(a) for a in rest.rstrip(")").split(",") if a] if rest else []
    makers = {
        "complete": complete,
        "K": complete,
        "cycle": cycle,
        "C": cycle,
        "path": path,
        "P": path,
        "complete_multipartite": complete_multipartite,
        "kt_minus": kt_minus,
        "kt_doubleminus": kt_doubleminus,
        "empty": Graph.empty,
        "petersen": petersen,
    }
    if name not in makers:
        raise GraphError(f"unknown named graph {spec!r}")
    try:
        return makers[name](*args)
    except TypeError as exc:
        raise GraphError(f"bad arguments for {name}: {args}") from exc
