"""Acceptance gate: one test per criterion, each timed against its budget.

Every test records a ``PASS``/``FAIL`` line; the lines are printed in the
terminal summary (and immediately, when run with ``-s``).
"""

from __future__ import annotations

import json
import random
import time
from contextlib import contextmanager
from itertools import islice

import pytest

from ivfg import (
    EnumSpec,
    Grid,
    classify,
    complement_strong,
    enumerate_graphs,
    is_complete,
    is_strong,
    new_graph,
    random_graph,
    read_graph,
    write_graph,
)
from ivfg.cli import main
from ivfg.metrics import degrees
from ivfg.verify import assert_handshake, run_suite, search_theorem4_converse

import oracle

pytestmark = pytest.mark.acceptance

HALVES = Grid.parse("0,0.5,1")
QUARTERS = Grid.parse("0,0.25,0.5")


@contextmanager
def criterion(log, number: int, title: str, budget: float):
    started = time.perf_counter()
    status = "FAIL"
    detail = ""
    try:
        yield
        elapsed = time.perf_counter() - started
        if elapsed >= budget:
            detail = f" over budget {budget:g}s"
            raise AssertionError(f"criterion {number} took {elapsed:.2f}s, budget {budget:g}s")
        status = "PASS"
    except BaseException as exc:
        detail = detail or f" {type(exc).__name__}: {exc}"[:200]
        raise
    finally:
        elapsed = time.perf_counter() - started
        line = f"{status} criterion {number}: {title} ({elapsed:.2f}s / {budget:g}s){detail if status == 'FAIL' else ''}"
        log.append(line)
        print(line)


def test_criterion_1_triangle_metrics(fixture_path, capsys, acceptance_log):
    with criterion(acceptance_log, 1, "triangle degrees, order and size exact", 1.0):
        code = main(["metrics", str(fixture_path("triangle.ivfg"))])
        lines = capsys.readouterr().out.splitlines()
        assert code == 0
        for want in ("d(x) = (0.2, 0.7)", "d(y) = (0.3, 0.7)", "d(z) = (0.3, 0.8)",
                     "order = (0.9, 1.4)", "size = (0.4, 1.1)"):
            assert want in lines, want


def test_criterion_2_highly_not_neighbourly(four_vertex_highly_irregular, acceptance_log):
    g = four_vertex_highly_irregular
    with criterion(acceptance_log, 2, "four-vertex graph highly but not neighbourly irregular", 1.0):
        r = classify(g)
        d = degrees(g)
        assert r.highly_irregular is True
        assert r.neighbourly_irregular is False
        assert d["v3"] == d["v4"] == g.pair("0.5", "0.8")
        assert g.edge("v3", "v4") is not None
        assert d["v2"] == g.pair("0.7", "1.2")


def _identity_run(tid):
    (out,) = run_suite(EnumSpec(4, HALVES), [tid], seed=0, constructed_count=1000)
    return out


@pytest.mark.parametrize("number, tid, title", [
    (3, "2", "size of regular graphs is (n k1/2, n k2/2)"),
    (4, "3", "2S + O = (n k, n k') on totally regular graphs"),
])
def test_criteria_3_4_identities(number, tid, title, acceptance_log):
    with criterion(acceptance_log, number, title, 30.0):
        out = _identity_run(tid)
        assert out.sources == {"exhaustive": out.sources["exhaustive"], "constructed": 1000}
        assert out.counterexample_count == 0
        assert out.confirmations > 0
        if tid == "2":
            # every constructed cycle is regular by construction
            assert out.confirmations >= 1000


def test_criterion_5_even_cycles(acceptance_log):
    with criterion(acceptance_log, 5, "even cycles n=4,6: regular iff period-2 edges", 60.0):
        (out,) = run_suite(EnumSpec(6, QUARTERS), ["1"], seed=0)
        assert out.counterexample_count == 0
        assert out.instances_checked == 5 ** 4 + 5 ** 6
        assert out.confirmations > 0


def test_criterion_6_forward_and_constant_lift(acceptance_log):
    with criterion(acceptance_log, 6, "distinct degrees imply both irregularities; constant-vertex lift", 60.0):
        spec = EnumSpec(4, HALVES, require_connected=True)
        outcomes = run_suite(spec, ["4", "5"], seed=0, random_count=10_000, random_n_max=6)
        for out in outcomes:
            assert out.sources["random"] == 10_000
            assert out.counterexample_count == 0, out.counterexamples[:1]
            assert out.confirmations > 0


def _independently_confirmed(document: dict) -> bool:
    """Recompute the converse's premises from the serialised document alone."""
    g = read_graph(json.dumps(document))
    V, E = oracle.frac_graph(g)
    degs = [oracle.degree(V, E, v) for v in V]
    return (
        oracle.crisp_connected(V, E)
        and oracle.neighbourly_irregular(V, E)
        and oracle.highly_irregular(V, E)
        and len(set(degs)) < len(degs)
    )


def test_criterion_7_converse_search(acceptance_log):
    with criterion(acceptance_log, 7, "converse search n<=5 deterministic and re-validated", 300.0):
        spec = EnumSpec(5, HALVES)
        first = json.dumps(search_theorem4_converse(spec).to_dict(), sort_keys=True)
        second = json.dumps(search_theorem4_converse(spec).to_dict(), sort_keys=True)
        assert first == second
        report = json.loads(first)
        for c in report["counterexamples"]:
            assert _independently_confirmed(c["graph"])
    acceptance_log.append(
        f"     converse report: {report['instances_checked']} connected labeled graphs, "
        f"{report['confirmations']} confirm, {report['counterexample_count']} counterexamples; "
        + "; ".join(report["notes"])
    )


def _random_stream(count, seed=0):
    rng = random.Random(seed)
    for i in range(count):
        yield random_graph(rng.randint(1, 6), HALVES, rng.randint(1, 4) / 4, rng=rng, constant_vertices=bool(i % 2))


def _rebuilt_shuffled(g, rng):
    vs, es = list(g.vertices.items()), list(g.edges.items())
    rng.shuffle(vs)
    rng.shuffle(es)
    h = new_graph(g.denominator)
    for vid, mu in vs:
        h = h.add_vertex(vid, mu)
    for (u, v), mu in es:
        h = h.add_edge(v, u, mu) if rng.random() < 0.5 else h.add_edge(u, v, mu)
    return h


def _positive_strong(g):
    return all(mu.is_positive for mu in g.edges.values())


def test_criterion_8_property_suites(acceptance_log):
    with criterion(acceptance_log, 8, "handshake, involution, complete=>strong, round trip, order independence", 120.0):
        rng = random.Random(0)
        pool = list(_random_stream(10_000))
        for n in (1, 2, 3):
            pool.extend(enumerate_graphs(EnumSpec(n, HALVES)))
        for g in pool:
            assert_handshake(g)
            if is_complete(g):
                assert is_strong(g)
            data = write_graph(g)
            h = read_graph(data)
            assert h == g and write_graph(h) == data
        for g in islice(pool, 2000):
            assert _rebuilt_shuffled(g, rng) == g
        involutions = 0
        for n in (1, 2, 3, 4):
            for g in enumerate_graphs(EnumSpec(n, HALVES, require_strong=True)):
                if _positive_strong(g):
                    assert complement_strong(complement_strong(g)) == g
                    involutions += 1
        assert involutions > 0
        # complete graphs on every vertex assignment at n=3 are strong
        for a, b, c in ((x, y, z) for x in HALVES.intervals() for y in HALVES.intervals() for z in HALVES.intervals()):
            vs = {"a": a, "b": b, "c": c}
            es = {(u, v): vs[u].meet(vs[v]) for u, v in (("a", "b"), ("a", "c"), ("b", "c"))}
            g = new_graph(HALVES.denominator)
            for k, mu in vs.items():
                g = g.add_vertex(k, mu)
            for (u, v), mu in es.items():
                g = g.add_edge(u, v, mu)
            assert is_complete(g) and is_strong(g)
