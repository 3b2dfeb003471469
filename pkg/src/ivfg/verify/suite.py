"""Theorem suite runner and the Theorem 4 converse search."""

from __future__ import annotations

import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Iterable

import numpy as np

from ..batch import edge_head_count, iter_edge_batches, iter_prefix_batches
from ..core import IVFGError, IVFuzzyGraph
from ..generate import EnumSpec, Grid, enumerate_cycles, enumerate_graphs, random_graph, random_regular_cycle
from ..io import graph_to_document, read_graph, write_graph
from . import kernels
from .theorems import CHECKS, CONFIRMED, SKIPPED, VIOLATED, HandshakeError, Verdict, assert_handshake

__all__ = [
    "THEOREM_IDS",
    "ASSERTED",
    "Counterexample",
    "VerifyOutcome",
    "EngineMismatch",
    "run_suite",
    "search_theorem4_converse",
    "default_workers",
]

THEOREM_IDS = ("1", "2", "3", "4", "4c", "5")
# 4c is a search: its findings never count as failures
ASSERTED = frozenset({"1", "2", "3", "4", "5"})

DEFAULT_CONSTRUCT_GRID = Grid(20, tuple(range(21)))


class EngineMismatch(IVFGError, AssertionError):
    """The vectorised engine and the scalar oracle disagree on an instance."""


@dataclass
class Counterexample:
    graph: IVFuzzyGraph
    explanation: str
    source: str = "exhaustive"

    def to_dict(self) -> dict:
        return {"source": self.source, "explanation": self.explanation, "graph": graph_to_document(self.graph)}


@dataclass
class VerifyOutcome:
    """Tally for one theorem.

    ``confirmations + counterexample_count`` equals the number of instances
    whose hypothesis held; ``skipped`` counts the rest.  At most
    ``keep`` counterexamples are stored, the earliest in enumeration order.
    """

    theorem_id: str
    instances_checked: int = 0
    skipped: int = 0
    confirmations: int = 0
    counterexample_count: int = 0
    counterexamples: list[Counterexample] = field(default_factory=list)
    sources: dict[str, int] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)
    elapsed: float = 0.0
    keep: int = 20

    @property
    def asserted(self) -> bool:
        return self.theorem_id in ASSERTED

    @property
    def hypothesis_held(self) -> int:
        return self.confirmations + self.counterexample_count

    @property
    def failed(self) -> bool:
        return self.asserted and self.counterexample_count > 0

    def tally(self, status: str, count: int, source: str) -> None:
        self.instances_checked += count
        self.sources[source] = self.sources.get(source, 0) + count
        if status == SKIPPED:
            self.skipped += count
        elif status == CONFIRMED:
            self.confirmations += count
        elif status == VIOLATED:
            self.counterexample_count += count
        else:
            raise ValueError(status)

    def wants_more(self) -> bool:
        return len(self.counterexamples) < self.keep

    def merge(self, other: VerifyOutcome) -> None:
        self.instances_checked += other.instances_checked
        self.skipped += other.skipped
        self.confirmations += other.confirmations
        self.counterexample_count += other.counterexample_count
        room = self.keep - len(self.counterexamples)
        self.counterexamples.extend(other.counterexamples[: max(room, 0)])
        for k, v in other.sources.items():
            self.sources[k] = self.sources.get(k, 0) + v
        self.notes.extend(other.notes)
        self.elapsed += other.elapsed

    def finish(self) -> None:
        self.counterexamples.sort(key=lambda c: write_graph(c.graph))

    def to_dict(self, timing: bool = False) -> dict:
        out = {
            "theorem_id": self.theorem_id,
            "asserted": self.asserted,
            "instances_checked": self.instances_checked,
            "skipped": self.skipped,
            "confirmations": self.confirmations,
            "counterexample_count": self.counterexample_count,
            "sources": dict(sorted(self.sources.items())),
            "notes": list(self.notes),
            "counterexamples": [c.to_dict() for c in self.counterexamples],
        }
        if timing:
            out["elapsed_seconds"] = round(self.elapsed, 3)
        return out


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get("IVFG_THREADS", "1")))
    except ValueError:
        return 1


def _revalidate(tid: str, g: IVFuzzyGraph, strict: bool) -> Verdict:
    """Re-run the scalar oracle on a freshly deserialised copy."""
    fresh = read_graph(write_graph(g))
    check = CHECKS[tid]
    return check(fresh, strict=strict) if tid == "4c" else check(fresh)


def _record_violation(out: VerifyOutcome, tid: str, g: IVFuzzyGraph, verdict: Verdict, source: str, strict: bool):
    if not out.wants_more():
        return
    again = _revalidate(tid, g, strict)
    if not again.violated:
        raise EngineMismatch(f"theorem {tid}: counterexample did not re-validate ({again.status})")
    out.counterexamples.append(Counterexample(g, verdict.explanation, source))


def _check_scalar(out: VerifyOutcome, tid: str, graphs: Iterable[IVFuzzyGraph], source: str, strict: bool = False):
    check = CHECKS[tid]
    for g in graphs:
        assert_handshake(g)
        verdict = check(g, strict=strict) if tid == "4c" else check(g)
        out.tally(verdict.status, 1, source)
        if verdict.violated:
            _record_violation(out, tid, g, verdict, source, strict)


# -- exhaustive, prefix-batched --------------------------------------------

def _prefix_job(args) -> VerifyOutcome:
    tid, spec, prefixes, keep = args
    out = VerifyOutcome(tid, keep=keep)
    check = CHECKS[tid]
    for batch in iter_prefix_batches(spec, prefixes=prefixes):
        lo, hi = batch.degrees()
        if not kernels.handshake_ok(batch, lo, hi):
            raise HandshakeError(f"degree sums disagree with size in batch {batch.vertex_mu}")
        keep_rows = batch.connected() if spec.require_connected else np.ones(batch.rows, dtype=bool)
        hyp = kernels.hypothesis_mask(tid, batch, lo, hi) & keep_rows
        total = int(keep_rows.sum())
        held = int(hyp.sum())
        out.tally(SKIPPED, total - held, "exhaustive")
        for r in np.flatnonzero(hyp):
            g = batch.materialize(int(r))
            verdict = check(g)
            if verdict.status == SKIPPED:
                raise EngineMismatch(f"theorem {tid}: batch hypothesis holds but oracle skipped: {verdict.explanation}")
            out.tally(verdict.status, 1, "exhaustive")
            if verdict.violated:
                _record_violation(out, tid, g, verdict, "exhaustive", False)
    return out


def _partitions(total: int, parts: int) -> list[range]:
    parts = max(1, min(parts, total))
    step = -(-total // parts)
    return [range(i, min(i + step, total)) for i in range(0, total, step)]


def _run_jobs(fn, jobs: list, workers: int) -> list:
    if workers <= 1 or len(jobs) <= 1:
        return [fn(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, jobs))


def _exhaustive(out: VerifyOutcome, tid: str, spec: EnumSpec, engine: str, workers: int):
    if engine == "stream":
        _check_scalar(out, tid, enumerate_graphs(spec), "exhaustive")
        return
    prefixes = len(spec.grid.intervals()) ** spec.vertex_count
    jobs = [(tid, spec, r, out.keep) for r in _partitions(prefixes, workers * 4 if workers > 1 else 1)]
    for part in _run_jobs(_prefix_job, jobs, workers):
        out.merge(part)


# -- Theorem 4 converse -----------------------------------------------------

def _converse_rows(batch, strict: bool):
    lo, hi = batch.degrees()
    if not kernels.handshake_ok(batch, lo, hi):
        raise HandshakeError("degree sums disagree with size")
    code = kernels.pack(lo, hi)
    hyp = kernels.neighbourly(code, batch.present, batch.pairs) & kernels.highly(
        code, batch.present, batch.pairs, batch.n, strict
    )
    distinct = kernels.all_distinct(code)
    return hyp, distinct


def _converse_job(args) -> VerifyOutcome:
    n, spec, heads, strict, keep = args
    out = VerifyOutcome("4c", keep=keep)
    patterns = 0
    if spec.require_strong:
        batches = iter_prefix_batches(replace(spec, vertex_count=n), prefixes=heads)
    else:
        batches = iter_edge_batches(n, spec.grid, spec.zero_edges_as_absent, heads=heads)
    for batch in batches:
        if spec.require_strong:
            w = batch.connected().astype(np.int64)
        else:
            w = batch.weights(require_connected=True)
        hyp, distinct = _converse_rows(batch, strict)
        live = w > 0
        total = int(w.sum())
        held = int(w[hyp].sum())
        bad = hyp & ~distinct & live
        n_bad = int(w[bad].sum())
        out.tally(SKIPPED, total - held, "exhaustive")
        out.tally(CONFIRMED, held - n_bad, "exhaustive")
        out.tally(VIOLATED, n_bad, "exhaustive")
        patterns += int(bad.sum())
        for r in np.flatnonzero(bad):
            if not out.wants_more():
                break
            r = int(r)
            g = batch.materialize(r) if spec.require_strong else batch.materialize(r, require_connected=True)
            verdict = CHECKS["4c"](g, strict=strict)
            if not verdict.violated:
                raise EngineMismatch(f"converse row {r} not confirmed by the scalar oracle: {verdict.status}")
            _record_violation(out, "4c", g, verdict, "exhaustive", strict)
    if patterns:
        out.notes.append(f"n={n}:patterns={patterns}")
    return out


def search_theorem4_converse(spec: EnumSpec, *, strict: bool = False, keep: int = 20,
                             workers: int | None = None, sizes: Iterable[int] | None = None) -> VerifyOutcome:
    """Exhaustively look for connected graphs that are highly and neighbourly
    irregular yet have two vertices with the same degree pair.

    Covers every vertex count from 1 to ``spec.vertex_count`` (or ``sizes``).
    Counts are over labeled graphs; each stored counterexample is a
    representative with the smallest vertex memberships its edges allow, and
    is re-validated on a deserialised copy.  ``notes`` lists, per vertex
    count, how many distinct edge patterns produced counterexamples.
    """
    workers = default_workers() if workers is None else workers
    started = time.perf_counter()
    out = VerifyOutcome("4c", keep=keep)
    for n in (sizes if sizes is not None else range(1, spec.vertex_count + 1)):
        if spec.require_strong:
            total = len(spec.grid.intervals()) ** n
        else:
            total = edge_head_count(n, spec.grid, spec.zero_edges_as_absent)
        jobs = [(n, spec, r, strict, keep) for r in _partitions(total, workers * 4 if workers > 1 else 1)]
        patterns = 0
        for part in _run_jobs(_converse_job, jobs, workers):
            for note in part.notes:
                patterns += int(note.rsplit("=", 1)[1])
            part.notes = []
            out.merge(part)
        if patterns:
            out.notes.append(f"n={n}: {patterns} counterexample edge patterns")
    out.elapsed = time.perf_counter() - started
    out.finish()
    return out


# -- suite ------------------------------------------------------------------

def _random_instances(seed: int, count: int, grid: Grid, n_max: int) -> list[IVFuzzyGraph]:
    """Seeded stream; every second instance has one shared vertex membership
    so the constant-membership hypothesis is exercised."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        n = rng.randint(1, n_max)
        p = Fraction(rng.randint(1, 4), 4)
        out.append(random_graph(n, grid, p, rng=rng, constant_vertices=bool(i % 2)))
    return out


def _constructed_instances(seed: int, count: int, grid: Grid) -> list[IVFuzzyGraph]:
    rng = random.Random(f"regular-cycles:{seed}")
    return [random_regular_cycle(rng, grid) for _ in range(count)]


def run_suite(
    spec: EnumSpec,
    theorems: Iterable[str],
    seed: int | None = None,
    *,
    random_count: int = 0,
    random_n_max: int = 6,
    constructed_count: int = 0,
    construct_grid: Grid | None = None,
    engine: str = "batch",
    keep: int = 20,
    strict_highly: bool = False,
    workers: int | None = None,
    exhaustive: bool = True,
) -> list[VerifyOutcome]:
    """Run the selected theorem oracles; one outcome per theorem, in id order.

    Instance sources, each tallied separately in ``sources``:

    * ``exhaustive``: every graph on 1..``spec.vertex_count`` vertices over
      ``spec.grid`` (Theorem 1: every labeling of the even cycles up to that
      length, vertices at ``[1, 1]``).
    * ``constructed``: ``constructed_count`` seeded regular even cycles.
    * ``random``: ``random_count`` seeded random graphs on up to
      ``random_n_max`` vertices.

    ``engine="stream"`` runs the scalar oracle on every enumerated graph;
    ``"batch"`` screens hypotheses with numpy and hands only the instances
    meeting them to the scalar oracle.  Results are identical.  A missing
    ``seed`` means 0.
    """
    theorems = set(theorems)
    unknown = sorted(theorems - set(THEOREM_IDS))
    if unknown:
        raise ValueError(f"unknown theorem id(s): {', '.join(unknown)}")
    selected = [t for t in THEOREM_IDS if t in theorems]
    if engine not in ("batch", "stream"):
        raise ValueError(f"unknown engine {engine!r}")
    seed = 0 if seed is None else seed
    workers = default_workers() if workers is None else workers
    randoms = _random_instances(seed, random_count, spec.grid, random_n_max) if random_count else []
    built = _constructed_instances(seed, constructed_count, construct_grid or DEFAULT_CONSTRUCT_GRID) if constructed_count else []

    results = []
    for tid in selected:
        started = time.perf_counter()
        if tid == "4c":
            out = search_theorem4_converse(spec, strict=strict_highly, keep=keep, workers=workers) if exhaustive \
                else VerifyOutcome("4c", keep=keep)
            if randoms:
                _check_scalar(out, "4c", randoms, "random", strict_highly)
        else:
            out = VerifyOutcome(tid, keep=keep)
            if exhaustive:
                if tid == "1":
                    for n in range(4, spec.vertex_count + 1, 2):
                        _check_scalar(out, tid, enumerate_cycles(n, spec.grid), "exhaustive")
                else:
                    for n in range(1, spec.vertex_count + 1):
                        _exhaustive(out, tid, replace(spec, vertex_count=n), engine, workers)
            _check_scalar(out, tid, built, "constructed")
            _check_scalar(out, tid, randoms, "random")
        out.elapsed = time.perf_counter() - started
        out.finish()
        results.append(out)
    return results
