"""``minorbench`` command line.

Graph arguments are graph6 strings, named graphs such as ``complete(9)`` or
``kt_doubleminus(9)`` (which expands to both graphs), ``@path`` to read one
graph6 string per line from a file, or ``-`` for standard input.  All
inputs are parsed before any work starts.  Results go to stdout,
diagnostics to stderr.

Exit codes: 0 result produced, 1 a verdict that was asserted to hold came
out negative (``extremal`` finds neither branch, ``verify-lemma`` finds a
counterexample), 2 usage, parse or precondition error.
"""

from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path

from . import __version__
from .cockade import CockadePlan, build_cockade, cockade_coloring, random_plan, recognize_cockade
from .coloring import chromatic_number, criticality_profile
from .connectivity import vertex_connectivity, min_vertex_separator
from .constructions import NEITHER, PreconditionError, scan_extremal, two_k7_to_k9eq
from .generate import format_cursor, parse_cursor, walk
from .graph import Graph, GraphError, from_graph6, max_independent_set, named_graph, to_graph6
from .minors import has_k9eq_minor, has_minor
from .verify import default_jobs, verify_deletion_lemma

DEFAULT_SEED = 0


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _read_text(arg: str) -> str:
    if arg == "-":
        return sys.stdin.read()
    if arg.startswith("@"):
        try:
            return Path(arg[1:]).read_text()
        except OSError as exc:
            raise UsageError(f"cannot read {arg[1:]}: {exc.strerror}") from exc
    return arg


def read_graphs(arg: str) -> list[Graph]:
    if arg == "-" or arg.startswith("@"):
        lines = [ln.strip() for ln in _read_text(arg).splitlines()]
        graphs = []
        for num, line in enumerate(lines, 1):
            if not line or line.startswith("#"):
                continue
            try:
                graphs.append(from_graph6(line))
            except GraphError as exc:
                raise UsageError(f"{arg} line {num}: {exc}") from exc
        if not graphs:
            raise UsageError(f"{arg} contains no graphs")
        return graphs
    if "(" in arg or arg == "petersen":
        try:
            got = named_graph(arg)
        except (GraphError, ValueError) as exc:
            raise UsageError(str(exc)) from exc
        return list(got) if isinstance(got, tuple) else [got]
    try:
        return [from_graph6(arg)]
    except GraphError as exc:
        raise UsageError(f"graph {arg!r}: {exc}") from exc


def read_graph(arg: str) -> Graph:
    graphs = read_graphs(arg)
    if len(graphs) != 1:
        raise UsageError(f"{arg} holds {len(graphs)} graphs where one is expected")
    return graphs[0]


def _vertex_set(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise UsageError(f"bad vertex list {text!r}") from exc


def _plan(arg: str) -> CockadePlan:
    if arg.startswith("@") or arg == "-" or arg.startswith("cockade"):
        text = _read_text(arg)
    else:
        text = _read_text("@" + arg)
    try:
        return CockadePlan.from_text(text)
    except GraphError as exc:
        raise UsageError(f"plan: {exc}") from exc


# subcommands --------------------------------------------------------------------

def cmd_minor(a, out) -> int:
    hs = read_graph(a.H)
    for g in a.G:
        m = has_minor(g, hs)
        print("none" if m is None else m.describe(), file=out)
    return 0


def cmd_k9eq(a, out) -> int:
    for g in a.G:
        found = has_k9eq_minor(g)
        print("none" if found is None else f"variant {found[0]}: {found[1].describe()}", file=out)
    return 0


def cmd_chromatic(a, out) -> int:
    for g in a.G:
        k, col = chromatic_number(g)
        print(k if not a.witness else f"{k}: {' '.join(map(str, col.colors))}", file=out)
    return 0


def cmd_alpha(a, out) -> int:
    for g in a.G:
        s = sorted(max_independent_set(g))
        print(len(s) if not a.witness else f"{len(s)}: {' '.join(map(str, s))}", file=out)
    return 0


def cmd_connectivity(a, out) -> int:
    for g in a.G:
        if g.n < 2:
            raise UsageError("connectivity needs at least 2 vertices")
        k = vertex_connectivity(g)
        if a.witness:
            sep = min_vertex_separator(g)
            print(f"{k}: " + ("complete" if sep is None else " ".join(map(str, sorted(sep)))), file=out)
        else:
            print(k, file=out)
    return 0


def cmd_cockade(a, out) -> int:
    if a.action == "build":
        print(to_graph6(build_cockade(_plan(a.target))), file=out)
        return 0
    if a.action == "color":
        print(" ".join(map(str, cockade_coloring(_plan(a.target)).colors)), file=out)
        return 0
    if a.action == "random":
        try:
            pieces = int(a.target)
        except ValueError as exc:
            raise UsageError("cockade random needs a piece count") from exc
        if pieces < 1:
            raise UsageError("piece count must be positive")
        out.write(random_plan(pieces, random.Random(a.seed)).to_text())
        return 0
    for g in read_graphs(a.target):
        if g.n < 8:
            print("none", file=out)
            continue
        plan = recognize_cockade(g)
        out.write("none\n" if plan is None else plan.to_text())
    return 0


def cmd_gen(a, out) -> int:
    cursor = None
    if a.cursor:
        try:
            n, d, strategy, cursor = parse_cursor(Path(a.cursor).read_text())
        except OSError as exc:
            raise UsageError(f"cannot read cursor: {exc.strerror}") from exc
        if (n, d) != (a.N, a.MINDEG):
            raise UsageError("cursor belongs to a different universe")
    count = 0
    last = None
    try:
        for path, g in walk(a.N, a.MINDEG, a.strategy, cursor):
            if a.limit is not None and count >= a.limit:
                break
            print(to_graph6(g), file=out)
            count += 1
            last = path
    except GraphError as exc:
        raise UsageError(str(exc)) from exc
    if a.save_cursor and last is not None:
        Path(a.save_cursor).write_text(format_cursor(a.N, a.MINDEG, a.strategy, last))
    return 0


def cmd_verify(a, out) -> int:
    jobs = a.jobs if a.jobs is not None else default_jobs()
    if jobs < 1:
        raise UsageError("--jobs must be positive")
    checkpoint = a.resume or a.checkpoint
    if a.resume and not Path(a.resume).is_dir():
        raise UsageError(f"no checkpoint directory at {a.resume}")
    try:
        rep = verify_deletion_lemma(a.N, a.D, a.T, jobs=jobs, checkpoint=checkpoint,
                                    with_certificates=not a.failures_only)
    except GraphError as exc:
        raise UsageError(str(exc)) from exc
    out.write(rep.to_text())
    sys.stderr.write(rep.timing.text())
    return 0 if rep.holds else 1


def cmd_extremal(a, out) -> int:
    if any(g.n < 8 for g in a.G):
        raise UsageError("extremal needs at least 8 vertices")
    status = 0
    for g in a.G:
        v = scan_extremal(g)
        line = f"{v.branch} edges={v.edges} bound={v.bound}"
        if v.model is not None:
            line += f" variant={v.variant} model={v.model.describe()}"
        print(line, file=out)
        if v.plan is not None:
            out.write(v.plan.to_text())
        if v.branch == NEITHER:
            status = 1
    return status


def cmd_two_k7(a, out) -> int:
    g = read_graph(a.G)
    try:
        variant, model = two_k7_to_k9eq(g, _vertex_set(a.U1), _vertex_set(a.U2))
    except PreconditionError as exc:
        raise UsageError(str(exc)) from exc
    print(f"variant {variant}: {model.describe()}", file=out)
    return 0


def cmd_profile(a, out) -> int:
    for g in a.G:
        p = criticality_profile(g, a.K)
        print(f"k={p.k} n={p.order} e={p.edges} min_degree={p.min_degree} edge_bound={p.edge_bound}", file=out)
        for r in p.records:
            print(f"vertex {r.vertex} degree={r.degree} alpha={r.alpha} bound={r.bound} "
                  f"{'ok' if r.ok else 'violation'}", file=out)
        print("degrees " + " ".join(f"{d}:{c}" for d, c in p.degree_counts.items()), file=out)
        print(f"forced_min_degree_vertices {p.min_degree_vertices_forced}", file=out)
        print(f"refutes_criticality {'yes' if p.refutes_criticality else 'no'}", file=out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="minorbench", description="Graph-minor workbench.")
    ap.add_argument("--version", action="version", version=f"minorbench {__version__}")
    sub = ap.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def graphs_cmd(name, fn, help_, witness=False):
        p = sub.add_parser(name, help=help_)
        p.add_argument("G", type=read_graphs, nargs="+")
        if witness:
            p.add_argument("--witness", action="store_true")
        p.set_defaults(fn=fn, flatten=True)
        return p

    p = sub.add_parser("minor", help="branch model of H in G, or none")
    p.add_argument("G", type=read_graphs)
    p.add_argument("H")
    p.set_defaults(fn=cmd_minor)
    graphs_cmd("k9eq", cmd_k9eq, "K9^= minor (either variant), or none")
    graphs_cmd("chromatic", cmd_chromatic, "chromatic number", witness=True)
    graphs_cmd("alpha", cmd_alpha, "independence number", witness=True)
    graphs_cmd("connectivity", cmd_connectivity, "vertex connectivity", witness=True)
    graphs_cmd("extremal", cmd_extremal, "K9^= minor or cockade when e >= 6n - 20")
    p = sub.add_parser("profile", help="per-vertex criticality profile")
    p.add_argument("G", type=read_graphs)
    p.add_argument("K", type=int)
    p.set_defaults(fn=cmd_profile)

    p = sub.add_parser("cockade", help="build, check, colour or draw cockade plans")
    p.add_argument("action", choices=["build", "check", "color", "random"])
    p.add_argument("target", help="plan (file, @file or inline text), graph, or piece count for random")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(fn=cmd_cockade)

    p = sub.add_parser("gen", help="one graph6 line per isomorphism class")
    p.add_argument("N", type=int)
    p.add_argument("MINDEG", type=int)
    p.add_argument("--strategy", choices=["auto", "direct", "complement"], default="auto")
    p.add_argument("--cursor", help="resume after the leaf stored in this cursor file")
    p.add_argument("--save-cursor", help="write a cursor for the last emitted graph")
    p.add_argument("--limit", type=int)
    p.set_defaults(fn=cmd_gen)

    p = sub.add_parser("verify-lemma", help="deletion-vertex check over generate(N, D)")
    p.add_argument("N", type=int)
    p.add_argument("D", type=int)
    p.add_argument("T", type=int)
    p.add_argument("--resume", metavar="CURSOR", help="checkpoint directory of an earlier run")
    p.add_argument("--checkpoint", help="directory that receives finished subtrees")
    p.add_argument("--jobs", type=int)
    p.add_argument("--failures-only", action="store_true", help="omit per-graph certificate lines")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("two-k7", help="K9^= model from two K7 subgraphs of a 7-connected graph")
    p.add_argument("G")
    p.add_argument("U1")
    p.add_argument("U2")
    p.set_defaults(fn=cmd_two_k7)
    return ap


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "flatten", False):
            args.G = [g for group in args.G for g in group]
        return args.fn(args, out)
    except UsageError as exc:
        print(f"minorbench: error: {exc}", file=sys.stderr)
        return 2
    except GraphError as exc:
        print(f"minorbench: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
