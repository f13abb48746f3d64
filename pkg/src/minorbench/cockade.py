"""(K8, K_{2,2,2,2,2}, 5)-cockades: build plans, recognition, 8-colouring.

Plan text format, one directive per line (``#`` starts a comment)::

    cockade 1
    piece K8
    piece K22222
    1 0 2 4 6 8 -> 3 4 5 6 7

``piece`` lines list the pieces in build order.  Every piece after the first
needs exactly one gluing line: ``i a b c d e -> p q r s t`` identifies
local vertices ``a..e`` of piece ``i`` (a 5-clique of the piece) with vertices
``p..t`` of the graph built from pieces ``0..i-1`` (a 5-clique there).

Local labels: ``K8`` is vertices 0..7; ``K22222`` has parts {0,1}, {2,3},
..., {8,9}.  Global labels: piece 0 keeps its local labels; each later piece
appends its unglued vertices in ascending local order.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .canon import are_isomorphic
from .coloring import Coloring
from .graph import Graph, GraphError, bits, cliques_of_size, complete, complete_multipartite

K8 = "K8"
K22222 = "K22222"
PIECES = {K8: complete(8), K22222: complete_multipartite(2, 2, 2, 2, 2)}
GLUE_SIZE = 5


class CockadeError(GraphError):
    pass


@dataclass(frozen=True)
class Gluing:
    piece: int
    local: tuple[int, ...]
    host: tuple[int, ...]


@dataclass(frozen=True)
class CockadePlan:
    pieces: tuple[str, ...]
    gluings: tuple[Gluing, ...] = ()

    def order(self) -> int:
        return sum(PIECES[p].n for p in self.pieces) - GLUE_SIZE * (len(self.pieces) - 1)

    def to_text(self) -> str:
        lines = ["cockade 1"] + [f"piece {p}" for p in self.pieces]
        for gl in self.gluings:
            lines.append(f"{gl.piece} {' '.join(map(str, gl.local))} -> {' '.join(map(str, gl.host))}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "CockadePlan":
        pieces: list[str] = []
        gluings: list[Gluing] = []
        header = False
        for num, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if not header:
                if line != "cockade 1":
                    raise CockadeError(f"line {num}: expected header 'cockade 1'")
                header = True
                continue
            word, _, rest = line.partition(" ")
            if word == "piece":
                if rest.strip() not in PIECES:
                    raise CockadeError(f"line {num}: unknown piece {rest.strip()!r}")
                pieces.append(rest.strip())
            elif "->" in line:
                left, arrow, right = line.partition("->")
                try:
                    nums = [int(x) for x in left.split()]
                    host = tuple(int(x) for x in right.split())
                except ValueError as exc:
                    raise CockadeError(f"line {num}: {exc}") from exc
                if not arrow or len(nums) != GLUE_SIZE + 1 or len(host) != GLUE_SIZE:
                    raise CockadeError(f"line {num}: gluing needs 'i a b c d e -> p q r s t'")
                gluings.append(Gluing(nums[0], tuple(nums[1:]), host))
            else:
                raise CockadeError(f"line {num}: unknown directive {word!r}")
        if not header:
            raise CockadeError("empty plan")
        return cls(tuple(pieces), tuple(gluings))


def _layout(plan: CockadePlan) -> tuple[Graph, list[list[int]]]:
    """Build the graph and, per piece, the global label of each local vertex."""
    if not plan.pieces:
        raise CockadeError("plan has no pieces")
    for p in plan.pieces:
        if p not in PIECES:
            raise CockadeError(f"unknown piece {p!r}")
    by_piece: dict[int, Gluing] = {}
    for gl in plan.gluings:
        if not 1 <= gl.piece < len(plan.pieces):
            raise CockadeError(f"gluing refers to piece {gl.piece}, which cannot be glued")
        if gl.piece in by_piece:
            raise CockadeError(f"piece {gl.piece} glued twice: structure is not a tree")
        by_piece[gl.piece] = gl
    missing = [i for i in range(1, len(plan.pieces)) if i not in by_piece]
    if missing:
        raise CockadeError(f"pieces {missing} are never glued: structure is not connected")
    first = PIECES[plan.pieces[0]]
    edges = list(first.edges())
    n = first.n
    labels = [list(range(first.n))]
    adj_sets: list[set[int]] = [set(first.neighbors(v)) for v in range(first.n)]
    for i in range(1, len(plan.pieces)):
        piece = PIECES[plan.pieces[i]]
        gl = by_piece[i]
        if len(set(gl.local)) != GLUE_SIZE or len(set(gl.host)) != GLUE_SIZE:
            raise CockadeError(f"gluing of piece {i} is not a bijection between 5-sets")
        if any(not 0 <= v < piece.n for v in gl.local) or any(not 0 <= v < n for v in gl.host):
            raise CockadeError(f"gluing of piece {i} uses an out-of-range vertex")
        if any(not piece.has_edge(a, b) for a, b in combinations(gl.local, 2)):
            raise CockadeError(f"gluing of piece {i}: local vertices are not a clique")
        if any(b not in adj_sets[a] for a, b in combinations(gl.host, 2)):
            raise CockadeError(f"gluing of piece {i}: host vertices are not a clique")
        m = dict(zip(gl.local, gl.host))
        for v in range(piece.n):
            if v not in m:
                m[v] = n
                n += 1
                adj_sets.append(set())
        for a, b in piece.edges():
            x, y = m[a], m[b]
            if y not in adj_sets[x]:
                adj_sets[x].add(y)
                adj_sets[y].add(x)
                edges.append((x, y))
        labels.append([m[v] for v in range(piece.n)])
    return Graph.from_edges(n, edges), labels


def build_cockade(plan: CockadePlan) -> Graph:
    return _layout(plan)[0]


def cockade_coloring(plan: CockadePlan) -> Coloring:
    """Proper colouring with at most 8 colours, permuting each piece to match its glued clique."""
    g, labels = _layout(plan)
    colors = [-1] * g.n
    base = {K8: list(range(8)), K22222: [v // 2 for v in range(10)]}
    for i, kind in enumerate(plan.pieces):
        local = base[kind]
        glob = labels[i]
        perm: dict[int, int] = {}
        if i:
            gl = next(x for x in plan.gluings if x.piece == i)
            for a, h in zip(gl.local, gl.host):
                perm[local[a]] = colors[h]
        spare = [c for c in range(8) if c not in perm.values()]
        for c in sorted(set(local)):
            if c not in perm:
                perm[c] = spare.pop(0)
        for v, gv in enumerate(glob):
            colors[gv] = perm[local[v]]
    return Coloring(tuple(colors))


# recognition -------------------------------------------------------------------

def _piece_kind(g: Graph) -> str | None:
    for kind, piece in PIECES.items():
        if g.n == piece.n and g.edge_count() == piece.edge_count() and are_isomorphic(g, piece):
            return kind
    return None


def _local_labels(g: Graph, kind: str) -> list[int]:
    """Map each vertex of a piece-isomorphic ``g`` to its local label in the standard piece."""
    if kind == K8:
        return list(range(8))
    labels = [-1] * g.n
    part = 0
    for v in range(g.n):
        if labels[v] != -1:
            continue
        (mate,) = [u for u in range(g.n) if u != v and not g.has_edge(u, v)]
        labels[v], labels[mate] = 2 * part, 2 * part + 1
        part += 1
    return labels


def _atoms(g: Graph, mask: int) -> list[int] | None:
    """Split ``g[mask]`` along 5-clique separators into pieces; ``None`` if an atom is not a piece."""
    sub = g.subgraph(mask)
    verts = list(bits(mask))
    if sub.n < 8:
        return None
    if sub.edge_count() != 6 * sub.n - 20:
        return None
    if _piece_kind(sub):
        return [mask]
    for clique in cliques_of_size(sub, GLUE_SIZE):
        comps = sub.components(sub.full_mask & ~clique)
        if len(comps) < 2:
            continue
        out = []
        for comp in comps:
            side = 0
            for x in bits(comp | clique):
                side |= 1 << verts[x]
            part = _atoms(g, side)
            if part is None:
                return None
            out += part
        return out
    return None


def recognize_cockade(g: Graph) -> CockadePlan | None:
    """A plan whose build is isomorphic to ``g``, or ``None`` if ``g`` is not such a cockade."""
    if g.n < 8 or g.edge_count() != 6 * g.n - 20:
        return None
    atoms = _atoms(g, g.full_mask)
    if atoms is None:
        return None
    atoms.sort(key=lambda m: (m & -m, m))
    first = atoms.pop(0)
    kinds = []
    gluings: list[Gluing] = []
    glob: dict[int, int] = {}  # G vertex -> plan label
    built = 0

    def place(atom: int, host: tuple[int, ...] = (), shared: tuple[int, ...] = ()) -> None:
        nonlocal built
        sub = g.subgraph(atom)
        kind = _piece_kind(sub)
        kinds.append(kind)
        verts = list(bits(atom))
        local = _local_labels(sub, kind)
        if shared:
            gluings.append(Gluing(len(kinds) - 1, tuple(local[verts.index(v)] for v in shared), host))
        order = sorted(range(len(verts)), key=lambda i: local[i])
        for i in order:
            v = verts[i]
            if v not in glob:
                glob[v] = len(glob)
        built |= atom

    place(first)
    while atoms:
        for j, atom in enumerate(atoms):
            meet = atom & built
            if meet.bit_count() == GLUE_SIZE:
                shared = tuple(bits(meet))
                atoms.pop(j)
                place(atom, tuple(glob[v] for v in shared), shared)
                break
        else:
            return None
    plan = CockadePlan(tuple(kinds), tuple(gluings))
    rebuilt = build_cockade(plan)
    inv = [0] * g.n
    for v, lab in glob.items():
        inv[v] = lab
    if g.relabel(inv).adj != rebuilt.adj:
        return None
    return plan


def random_plan(pieces: int, rng: random.Random, kinds: tuple[str, ...] = (K8, K22222)) -> CockadePlan:
    """A random plan; each new piece is glued onto a random 5-clique of the current build."""
    chosen = [rng.choice(kinds) for _ in range(pieces)]
    plan = CockadePlan(tuple(chosen[:1]))
    for i in range(1, pieces):
        g = build_cockade(plan)
        host_cliques = list(cliques_of_size(g, GLUE_SIZE))
        host = list(bits(rng.choice(host_cliques)))
        rng.shuffle(host)
        piece = PIECES[chosen[i]]
        local = list(bits(rng.choice(list(cliques_of_size(piece, GLUE_SIZE)))))
        rng.shuffle(local)
        plan = CockadePlan(tuple(chosen[:i + 1]), plan.gluings + (Gluing(i, tuple(local), tuple(host)),))
    return plan
