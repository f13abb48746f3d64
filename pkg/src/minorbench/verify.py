"""Exhaustive check that every graph of a universe has a vertex whose deletion leaves a K_t^= minor.

Report format (text, one record per line, fields separated by single spaces)::

    minorbench-report 1
    version 0.1.0
    universe n=9 min_degree=6 target=K7= strategy=complement
    partition split_level=6 subtrees=3
    records all|failures
    cert <graph6> y=<y> variant=<0|1> model=<b0>|<b1>|...
    counterexample <graph6>
    transcript <graph6> <free text>
    scanned <count>
    certificates <count>
    counterexamples <count>
    verdict holds|fails
    cursor complete|<done>/<total>
    end

``cert`` lines (present only with ``records all``) appear in
generation order; ``model`` lists branch sets as comma-separated vertex
labels of ``G`` (never containing ``y``), in the vertex order of the target
variant from ``kt_doubleminus``.  Every ``counterexample`` line is followed
by its ``transcript`` lines.  The body is a pure function of the
parameters: timings go to a separate sidecar so interrupted, resumed and
parallel runs give byte-identical reports.

Checkpoint directories hold ``params``, one ``shard-<i>.txt`` per finished
subtree (same record lines, plus a ``scanned`` trailer), a matching
``shard-<i>.timing`` and a ``cursor`` file in generation-cursor format
pointing at the last leaf of the last finished subtree.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass, field
import multiprocessing
from pathlib import Path
from typing import Iterator

from . import __version__
from .graph import Graph, GraphError, from_graph6, kt_doubleminus, to_graph6
from .generate import _strategy, check_guard, format_cursor, subtree_roots, walk
from .minors import (ORACLE_MAX_G, ORACLE_MAX_H, BranchModel, brute_minor_oracle, check_model,
                     has_kt_doubleminus_minor)

REPORT_MAGIC = "minorbench-report 1"
JOBS_ENV = "MINORBENCH_JOBS"


@dataclass(frozen=True)
class Certificate:
    graph6: str
    y: int
    variant: int
    model: BranchModel

    def line(self) -> str:
        return f"cert {self.graph6} y={self.y} variant={self.variant} model={self.model.describe().replace(' ', '')}"

    @classmethod
    def parse(cls, line: str) -> "Certificate":
        word, g6, y, var, model = line.split(" ")
        if word != "cert":
            raise GraphError(f"not a certificate line: {line!r}")
        return cls(g6, int(_kv(y, "y")), int(_kv(var, "variant")), BranchModel.parse(_kv(model, "model")))


@dataclass(frozen=True)
class Counterexample:
    graph6: str
    transcript: tuple[str, ...] = ()

    def lines(self) -> list[str]:
        return [f"counterexample {self.graph6}"] + [f"transcript {self.graph6} {t}" for t in self.transcript]


@dataclass
class TimingStats:
    graphs: int = 0
    total: float = 0.0
    slowest: float = 0.0
    wall: float = 0.0

    def add(self, other: "TimingStats"):
        self.graphs += other.graphs
        self.total += other.total
        self.slowest = max(self.slowest, other.slowest)

    def text(self) -> str:
        mean = self.total / self.graphs if self.graphs else 0.0
        return (f"graphs {self.graphs}\nsearch_seconds {self.total:.3f}\nmean_seconds {mean:.6f}\n"
                f"max_seconds {self.slowest:.6f}\nwall_seconds {self.wall:.3f}\n")


@dataclass
class VerificationReport:
    """Parameters, record lines and totals of one run.

    Records are kept as their report lines (millions of certificates are
    cheap as text); ``certificates()`` and ``counterexamples`` parse them.
    """

    n: int
    min_degree: int
    t: int
    strategy: str
    split_level: int
    subtrees: int
    scanned: int = 0
    records: list[str] = field(default_factory=list)
    done: int = 0
    with_certificates: bool = True
    version: str = __version__
    timing: TimingStats = field(default_factory=TimingStats)

    def certificates(self) -> Iterator[Certificate]:
        for line in self.records:
            if line.startswith("cert "):
                yield Certificate.parse(line)

    @property
    def certificate_count(self) -> int:
        if not self.with_certificates:  # every scanned graph is certified or a counterexample
            return self.scanned - sum(1 for line in self.records if line.startswith("counterexample "))
        return sum(1 for line in self.records if line.startswith("cert "))

    @property
    def counterexamples(self) -> list[Counterexample]:
        out: list[Counterexample] = []
        for line in self.records:
            word, _, rest = line.partition(" ")
            if word == "counterexample":
                out.append(Counterexample(rest))
            elif word == "transcript":
                g6, _, note = rest.partition(" ")
                if not out or out[-1].graph6 != g6:
                    raise GraphError("transcript does not follow its counterexample")
                out[-1] = Counterexample(g6, out[-1].transcript + (note,))
        return out

    @property
    def holds(self) -> bool:
        return not any(line.startswith("counterexample ") for line in self.records)

    @property
    def complete(self) -> bool:
        return self.done == self.subtrees

    @property
    def cursor(self) -> str:
        return "complete" if self.complete else f"{self.done}/{self.subtrees}"

    def to_text(self) -> str:
        out = [
            REPORT_MAGIC,
            f"version {self.version}",
            f"universe n={self.n} min_degree={self.min_degree} target=K{self.t}= strategy={self.strategy}",
            f"partition split_level={self.split_level} subtrees={self.subtrees}",
            f"records {'all' if self.with_certificates else 'failures'}",
        ]
        out += self.records
        out += [
            f"scanned {self.scanned}",
            f"certificates {self.certificate_count}",
            f"counterexamples {len(self.counterexamples)}",
            f"verdict {'holds' if self.holds else 'fails'}",
            f"cursor {self.cursor}",
            "end",
        ]
        return "\n".join(out) + "\n"


def _kv(token: str, key: str) -> str:
    k, sep, v = token.partition("=")
    if not sep or k != key:
        raise GraphError(f"expected {key}=..., got {token!r}")
    return v


RECORD_WORDS = ("cert", "counterexample", "transcript")


def parse_report(text: str) -> VerificationReport:
    lines = text.splitlines()
    if not lines or lines[0] != REPORT_MAGIC:
        raise GraphError("not a minorbench report")
    try:
        version = lines[1].split(" ", 1)[1]
        u = lines[2].split()
        n, d = int(_kv(u[1], "n")), int(_kv(u[2], "min_degree"))
        target = _kv(u[3], "target")
        t = int(target[1:-1])
        strategy = _kv(u[4], "strategy")
        part = lines[3].split()
        split, subtrees = int(_kv(part[1], "split_level")), int(_kv(part[2], "subtrees"))
        records = lines[4].split()
        if records[0] != "records" or records[1] not in ("all", "failures"):
            raise GraphError("missing records line")
        rep = VerificationReport(n, d, t, strategy, split, subtrees, version=version,
                                 with_certificates=records[1] == "all")
        footer: dict[str, str] = {}
        for line in lines[5:]:
            word, _, rest = line.partition(" ")
            if word in RECORD_WORDS:
                rep.records.append(line)
            elif word == "end":
                break
            else:
                footer[word] = rest
        rep.scanned = int(footer["scanned"])
        if int(footer["certificates"]) != rep.certificate_count:
            raise GraphError("certificate count does not match records")
        if int(footer["counterexamples"]) != len(rep.counterexamples):
            raise GraphError("counterexample count does not match records")
        cur = footer["cursor"]
        rep.done = subtrees if cur == "complete" else int(cur.split("/")[0])
        if footer["verdict"] != ("holds" if rep.holds else "fails"):
            raise GraphError("verdict does not match the counterexample list")
    except (IndexError, KeyError, ValueError) as exc:
        raise GraphError(f"malformed report: {exc!r}") from exc
    return rep


def validate_report(rep: VerificationReport, recheck_counterexamples: bool = False) -> list[str]:
    """Independent re-check of every record; returns a list of problems (empty when sound)."""
    problems = []
    targets = kt_doubleminus(rep.t)
    for c in rep.certificates():
        try:
            g = from_graph6(c.graph6)
        except GraphError as exc:
            problems.append(f"{c.graph6}: {exc}")
            continue
        if g.n != rep.n or g.min_degree() < rep.min_degree:
            problems.append(f"{c.graph6}: outside the universe")
        if not 0 <= c.y < g.n or any(c.y in b for b in c.model.branch_sets):
            problems.append(f"{c.graph6}: model uses the deleted vertex {c.y}")
        elif not 0 <= c.variant < len(targets) or not check_model(g, targets[c.variant], c.model):
            problems.append(f"{c.graph6}: invalid branch model")
    if rep.with_certificates and rep.complete and rep.scanned != rep.certificate_count + len(rep.counterexamples):
        problems.append("scanned count does not equal certificates plus counterexamples")
    if recheck_counterexamples:
        for c in rep.counterexamples:
            g = from_graph6(c.graph6)
            if search_graph(g, rep.t)[0] is not None:
                problems.append(f"{c.graph6}: a deletion vertex exists after all")
    return problems


# per-graph search -------------------------------------------------------------

def _delete(g: Graph, y: int) -> Graph:
    return g.subgraph(g.full_mask & ~(1 << y))


def _lift(model: BranchModel, y: int) -> BranchModel:
    return BranchModel(tuple(frozenset(v + (v >= y) for v in b) for b in model.branch_sets))


def search_graph(g: Graph, t: int) -> tuple[tuple[int, int, BranchModel] | None, list[str]]:
    """``((y, variant, model), transcript)``; the model is in ``g``'s labels.

    Deletion vertices are tried by ascending degree.  Only when no ``y``
    works is the search repeated without host decomposition and, within
    its guard, with the brute-force oracle, so a reported failure has been
    confirmed by every available method.
    """
    order = sorted(range(g.n), key=lambda v: (g.degree(v), v))
    for y in order:
        found = has_kt_doubleminus_minor(_delete(g, y), t)
        if found is not None:
            return (y, found[0], _lift(found[1], y)), []
    transcript = [f"pass=decomposed y={y} degree={g.degree(y)} result=none" for y in order]
    for y in order:
        found = has_kt_doubleminus_minor(_delete(g, y), t, decompose=False)
        if found is not None:
            transcript.append(f"pass=plain y={y} result=variant{found[0]}")
            return (y, found[0], _lift(found[1], y)), transcript
        transcript.append(f"pass=plain y={y} result=none")
    if g.n - 1 <= ORACLE_MAX_G and t <= ORACLE_MAX_H:
        for y in order:
            verdicts = [brute_minor_oracle(_delete(g, y), h) for h in kt_doubleminus(t)]
            transcript.append(f"pass=oracle y={y} result={'minor' if any(verdicts) else 'none'}")
    return None, transcript


# sharded driver -----------------------------------------------------------------

@dataclass(frozen=True)
class _Task:
    index: int
    root: tuple[int, ...]
    n: int
    min_degree: int
    t: int
    strategy: str


@dataclass
class _ShardResult:
    index: int
    lines: list[str]
    scanned: int
    last_path: tuple[int, ...] | None
    timing: TimingStats


def _run_shard(task: _Task) -> _ShardResult:
    timing = TimingStats()
    lines: list[str] = []
    scanned = 0
    last = None
    for path, g in walk(task.n, task.min_degree, task.strategy, root_path=task.root):
        start = time.perf_counter()
        found, transcript = search_graph(g, task.t)
        spent = time.perf_counter() - start
        timing.graphs += 1
        timing.total += spent
        timing.slowest = max(timing.slowest, spent)
        g6 = to_graph6(g)
        if found is None:
            lines += Counterexample(g6, tuple(transcript)).lines()
        else:
            y, var, model = found
            lines.append(Certificate(g6, y, var, model).line())
        scanned += 1
        last = path
    return _ShardResult(task.index, lines, scanned, last, timing)


def _shard_text(res: _ShardResult) -> str:
    return "\n".join(res.lines + [f"scanned {res.scanned}"]) + "\n"


def _read_shard(path: Path) -> tuple[list[str], int]:
    lines = path.read_text().splitlines()
    if not lines or not lines[-1].startswith("scanned "):
        raise GraphError(f"shard {path} is incomplete")
    return lines[:-1], int(lines[-1].split()[1])


def _params_text(n: int, d: int, t: int, strategy: str, split: int) -> str:
    return f"n={n}\nmin_degree={d}\nt={t}\nstrategy={strategy}\nsplit_level={split}\n"


def default_split_level(n: int) -> int:
    """Partition depth: three levels above the leaves keeps shards small but numerous."""
    return max(1, n - 3)


def default_jobs() -> int:
    raw = os.environ.get(JOBS_ENV)
    if raw is None:
        return 1
    try:
        jobs = int(raw)
    except ValueError as exc:
        raise GraphError(f"{JOBS_ENV} must be an integer, got {raw!r}") from exc
    if jobs < 1:
        raise GraphError(f"{JOBS_ENV} must be positive")
    return jobs


def verify_deletion_lemma(n: int = 11, min_degree: int = 6, t: int = 7, *, jobs: int = 1,
                          checkpoint: str | os.PathLike | None = None, with_certificates: bool = True,
                          strategy: str = "auto", split_level: int | None = None,
                          max_shards: int | None = None, progress=None) -> VerificationReport:
    """Scan ``generate(n, min_degree)`` for graphs where no ``G - y`` has a K_t^= minor.

    With ``checkpoint`` every finished subtree is written to that directory
    and reused by later calls with the same parameters.  ``max_shards``
    stops after that many new subtrees (the report is then partial).
    """
    check_guard(n, min_degree)
    if t < 4:
        raise GraphError("target K_t^= needs t >= 4")
    if jobs < 1:
        raise GraphError("jobs must be positive")
    mode = _strategy(n, min_degree, strategy)
    if split_level is None:
        split_level = default_split_level(n)
    roots = subtree_roots(n, min_degree, mode, split_level)
    rep = VerificationReport(n, min_degree, t, mode, split_level, len(roots), with_certificates=with_certificates)
    ckdir = Path(checkpoint) if checkpoint is not None else None
    params = _params_text(n, min_degree, t, mode, split_level)
    if ckdir is not None:
        ckdir.mkdir(parents=True, exist_ok=True)
        pfile = ckdir / "params"
        if pfile.exists() and pfile.read_text() != params:
            raise GraphError(f"checkpoint {ckdir} belongs to a different run")
        pfile.write_text(params)

    shards: dict[int, tuple[list[str], int]] = {}
    pending = []
    for i, root in enumerate(roots):
        f = ckdir / f"shard-{i}.txt" if ckdir else None
        if f is not None and f.exists():
            shards[i] = _read_shard(f)
            tf = f.with_suffix(".timing")
            if tf.exists():
                rep.timing.add(_parse_timing(tf.read_text()))
        else:
            pending.append(_Task(i, root, n, min_degree, t, mode))
    if max_shards is not None:
        pending = pending[:max_shards]

    start = time.perf_counter()
    last_path = None

    def absorb(res: _ShardResult):
        nonlocal last_path
        shards[res.index] = (res.lines, res.scanned)
        rep.timing.add(res.timing)
        if res.last_path is not None:
            last_path = res.last_path
        if ckdir is not None:
            tmp = ckdir / f"shard-{res.index}.tmp"
            tmp.write_text(_shard_text(res))
            tmp.replace(ckdir / f"shard-{res.index}.txt")
            (ckdir / f"shard-{res.index}.timing").write_text(res.timing.text())
            if last_path is not None:
                (ckdir / "cursor").write_text(format_cursor(n, min_degree, mode, last_path))
        if progress is not None:
            progress(len(shards), len(roots), res)

    if jobs == 1 or len(pending) <= 1:
        for task in pending:
            absorb(_run_shard(task))
    else:
        with multiprocessing.Pool(jobs) as pool:
            for res in pool.imap(_run_shard, pending):
                absorb(res)
    rep.timing.wall += time.perf_counter() - start

    rep.done = len(shards)
    for i in sorted(shards):
        lines, scanned = shards[i]
        rep.scanned += scanned
        if with_certificates:
            rep.records += lines
        else:
            rep.records += [line for line in lines if not line.startswith("cert ")]
    return rep


def _parse_timing(text: str) -> TimingStats:
    f = dict(line.split(" ", 1) for line in text.strip().splitlines())
    return TimingStats(int(f["graphs"]), float(f["search_seconds"]), float(f["max_seconds"]))
