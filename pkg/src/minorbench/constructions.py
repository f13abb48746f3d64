"""Constructive certificates: two K7s give a K9^= model, linkages around a hub, extremal scan."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .cockade import CockadePlan, recognize_cockade
from .connectivity import (COMMON_END, FULLY_DISJOINT, LINKAGE, PathSystem, Separator,
                           disjoint_paths, validate_path_system, vertex_connectivity)
from .graph import Graph, GraphError, bits, cliques_of_size, kt_doubleminus, mask_of
from .minors import BranchModel, check_model, has_k9eq_minor


class PreconditionError(GraphError):
    """Raised with the name of the failing check."""

    def __init__(self, check: str, detail: str = ""):
        self.check = check
        super().__init__(f"precondition failed: {check}" + (f" ({detail})" if detail else ""))


# two K7 subgraphs --------------------------------------------------------------

def _check_two_k7(g: Graph, u1: frozenset[int], u2: frozenset[int]):
    if g.n < 9:
        raise PreconditionError("order", f"|G| = {g.n} < 9")
    for name, u in (("U1", u1), ("U2", u2)):
        if len(u) != 7 or any(not 0 <= v < g.n for v in u):
            raise PreconditionError(f"{name} size", f"{name} must be 7 vertices of G")
        if not g.is_clique(mask_of(u)):
            raise PreconditionError(f"{name} clique", f"G[{name}] is not a K7")
    if u1 == u2:
        raise PreconditionError("distinct", "U1 = U2")
    kappa = vertex_connectivity(g)
    if kappa < 7:
        raise PreconditionError("7-connected", f"connectivity is {kappa}")


def two_k7_to_k9eq(g: Graph, u1: Iterable[int], u2: Iterable[int]) -> tuple[int, BranchModel]:
    """``(variant, model)`` of a K9^= minor in a 7-connected graph with two distinct K7s on ``u1``, ``u2``.

    Variant indices follow ``kt_doubleminus``: 0 misses two disjoint edges,
    1 misses two edges with a common end.
    """
    U1, U2 = frozenset(u1), frozenset(u2)
    _check_two_k7(g, U1, U2)
    common = U1 & U2
    if len(common) == 6:
        variant, sets = _fan_case(g, U1, U2)
    else:
        variant, sets = _linkage_case(g, U1, U2)
    model = BranchModel(tuple(frozenset(s) for s in sets))
    if not check_model(g, kt_doubleminus(9)[variant], model):
        raise AssertionError("two-K7 construction produced an invalid model")
    return variant, model


def _linkage_case(g: Graph, U1: frozenset[int], U2: frozenset[int]) -> tuple[int, list[set[int]]]:
    ps = disjoint_paths(g, U1, U2, 7, FULLY_DISJOINT)
    if isinstance(ps, Separator):  # impossible in a 7-connected graph
        raise AssertionError("7-connected graph without 7 disjoint paths")
    long = [p for p in ps.paths if len(p) > 1]
    short = [p for p in ps.paths if len(p) == 1]
    p6, p7 = long[-2], long[-1]
    whole = [set(p) for p in short + long[:-2]]
    a6, b6 = {p6[0]}, set(p6[1:])
    a7, b7 = {p7[0]}, set(p7[1:])
    # a6-b7 and a7-b6 need not be edges: the disjoint-edges variant
    return 0, [a6, b7, a7, b6] + whole


def _fan_case(g: Graph, U1: frozenset[int], U2: frozenset[int]) -> tuple[int, list[set[int]]]:
    core = U1 & U2
    (p,) = U1 - core
    (q,) = U2 - core
    outside = [v for v in range(g.n) if v not in U1 | U2]
    union = U1 | U2
    x = outside[0]
    ps = disjoint_paths(g, {x}, union, 7, COMMON_END)
    if isinstance(ps, Separator):
        raise AssertionError("7-connected graph without a 7-fan")
    blob = set()
    for path in ps.paths:
        blob |= set(path[:-1])
    reached = {path[-1] for path in ps.paths}
    (r,) = union - reached
    rest = sorted(core - {r})
    if r == p:
        return 1, [{p}, blob, {q}] + [{c} for c in sorted(core)]
    if r == q:
        return 1, [{q}, blob, {p}] + [{c} for c in sorted(core)]
    return 0, [blob, {r}, {p}, {q}] + [{c} for c in rest]


# linkages around a hub ----------------------------------------------------------

@dataclass(frozen=True)
class LinkageRequest:
    graph: Graph
    hub: int
    independent: frozenset[int]
    missing: tuple[tuple[int, int], ...]

    def validate(self):
        g, x = self.graph, self.hub
        if not 0 <= x < g.n:
            raise GraphError(f"hub {x} outside the graph")
        nbhd = set(g.neighbors(x))
        if not self.independent <= nbhd:
            raise GraphError("S must lie inside N(x)")
        if not g.is_independent(mask_of(self.independent)):
            raise GraphError("S is not independent")
        for u, v in self.missing:
            if u == v or g.has_edge(u, v):
                raise GraphError(f"pair {u}{v} is not a non-edge")
            for w in (u, v):
                if w not in nbhd or w in self.independent:
                    raise GraphError(f"pair {u}{v}: end {w} must lie in N(x) - S")


def _paths_between(g: Graph, u: int, v: int, allowed: int) -> Iterable[tuple[int, ...]]:
    """Induced u-v paths with interior inside ``allowed``, shortest first."""
    found = []

    def dfs(path: list[int], used: int):
        x = path[-1]
        if g.has_edge(x, v):
            found.append(tuple(path) + (v,))
            return
        for y in bits(g.adj[x] & allowed & ~used):
            # keep paths induced: y may touch only its predecessor among earlier vertices
            if any(g.has_edge(y, z) for z in path[:-1]):
                continue
            dfs(path + [y], used | 1 << y)

    for y in bits(g.adj[u] & allowed):
        dfs([u, y], 1 << y)
    found.sort(key=lambda p: (len(p), p))
    return found


def find_linkage(req: LinkageRequest, node_limit: int = 1_000_000) -> PathSystem | None:
    """Paths ``P_uv`` for every pair in ``req.missing``, interiors in ``G - N[x]``.

    Two paths need to be vertex-disjoint only when their four ends are
    distinct; paths sharing an end are unconstrained.  ``None`` means the
    search was exhausted (or hit ``node_limit``).
    """
    req.validate()
    g = req.graph
    pairs = list(req.missing)
    if not pairs:
        return PathSystem((), (), LINKAGE)
    outside = g.full_mask & ~(g.adj[req.hub] | 1 << req.hub)
    options = [_paths_between(g, u, v, outside) for u, v in pairs]
    order = sorted(range(len(pairs)), key=lambda i: (len(options[i]), i))
    chosen: dict[int, tuple[int, ...]] = {}
    budget = [node_limit]

    def clash(i: int, path: tuple[int, ...]) -> bool:
        ends = set(pairs[i])
        for j, other in chosen.items():
            if len(ends | set(pairs[j])) == 4 and set(path) & set(other):
                return True
        return False

    def rec(k: int) -> bool:
        if k == len(order):
            return True
        i = order[k]
        for path in options[i]:
            budget[0] -= 1
            if budget[0] < 0:
                return False
            if clash(i, path):
                continue
            chosen[i] = path
            if rec(k + 1):
                return True
            del chosen[i]
        return False

    if not rec(0):
        return None
    paths = tuple(chosen[i] for i in range(len(pairs)))
    ends = tuple((frozenset({u}), frozenset({v})) for u, v in pairs)
    ps = PathSystem(paths, ends, LINKAGE)
    assert validate_path_system(g, ps)
    return ps


# extremal dichotomy -------------------------------------------------------------

MINOR_BRANCH = "minor"
COCKADE_BRANCH = "cockade"
NOT_MET = "hypothesis-not-met"
NEITHER = "neither"


@dataclass(frozen=True)
class ExtremalVerdict:
    branch: str
    edges: int
    bound: int
    variant: int | None = None
    model: BranchModel | None = None
    plan: CockadePlan | None = None

    @property
    def supports_dichotomy(self) -> bool:
        return self.branch != NEITHER


def scan_extremal(g: Graph) -> ExtremalVerdict:
    """Check that a graph with at least ``6n - 20`` edges has a K9^= minor or is a cockade."""
    if g.n < 8:
        raise GraphError("extremal scan needs at least 8 vertices")
    e, bound = g.edge_count(), 6 * g.n - 20
    if e < bound:
        return ExtremalVerdict(NOT_MET, e, bound)
    found = has_k9eq_minor(g)
    if found is not None:
        return ExtremalVerdict(MINOR_BRANCH, e, bound, found[0], found[1])
    plan = recognize_cockade(g)
    if plan is not None:
        return ExtremalVerdict(COCKADE_BRANCH, e, bound, plan=plan)
    return ExtremalVerdict(NEITHER, e, bound)


def k7_subgraphs(g: Graph) -> list[frozenset[int]]:
    return [frozenset(bits(c)) for c in cliques_of_size(g, 7)]

