"""Structure-producing operations: support graph, complements, cycles."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .core import (
    DEFAULT_DENOMINATOR,
    IVFuzzyGraph,
    UnitInterval,
    ValidationError,
    Violation,
    as_interval,
    edge_key,
)

__all__ = [
    "CrispGraph",
    "NotStrongError",
    "underlying_crisp",
    "complement_strong",
    "complement_raw",
    "make_cycle",
]


class NotStrongError(ValidationError):
    """The complement is only defined for strong graphs."""


@dataclass(frozen=True)
class CrispGraph:
    vertices: frozenset = field(default_factory=frozenset)
    edges: frozenset = field(default_factory=frozenset)

    def adjacency(self) -> dict[str, list[str]]:
        adj: dict = {v: [] for v in sorted(self.vertices)}
        for u, v in sorted(self.edges):
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def components(self) -> list[list[str]]:
        adj = self.adjacency()
        seen: set = set()
        out = []
        for start in adj:
            if start in seen:
                continue
            comp, stack = [], [start]
            seen.add(start)
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in adj[x]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            out.append(sorted(comp))
        return out

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def cycle_order(self) -> list[str] | None:
        """Vertices in traversal order when the graph is one cycle through every
        vertex (length >= 3), starting at the smallest id towards its smaller
        neighbour.  ``None`` otherwise."""
        adj = self.adjacency()
        n = len(adj)
        if n < 3 or len(self.edges) != n or any(len(ns) != 2 for ns in adj.values()):
            return None
        start = min(adj)
        walk, prev, cur = [start], start, min(adj[start])
        while cur != start:
            walk.append(cur)
            a, b = adj[cur]
            prev, cur = cur, (b if a == prev else a)
        return walk if len(walk) == n else None


def underlying_crisp(g: IVFuzzyGraph) -> CrispGraph:
    """Keep vertices and edges whose lower and upper bounds are both > 0."""
    vs = frozenset(v for v, mu in g.vertices.items() if mu.lo > 0 and mu.hi > 0)
    es = frozenset(
        k for k, mu in g.edges.items() if mu.lo > 0 and mu.hi > 0 and k[0] in vs and k[1] in vs
    )
    return CrispGraph(vs, es)


def _strong_violations(g: IVFuzzyGraph) -> list[Violation]:
    out = []
    for key in g.sorted_edges():
        mu = g.edges[key]
        cap = g.vertices[key[0]].meet(g.vertices[key[1]])
        if mu != cap:
            out.append(
                Violation("not_strong", key, f"edge [{mu.lo}, {mu.hi}] differs from endpoint minima [{cap.lo}, {cap.hi}]")
            )
    return out


def complement_raw(g: IVFuzzyGraph) -> IVFuzzyGraph:
    """Apply the complement rules without checking that ``g`` is strong.

    Each bound is handled on its own: a bound that is positive in ``g``
    becomes 0, a zero (or absent) bound becomes the endpoint minimum.  A
    result with lower > upper, or exactly ``[0, 0]``, means no edge.  On
    non-strong input this is not an involution.
    """
    edges = {}
    for u, v in combinations(g.sorted_vertices(), 2):
        cap = g.vertices[u].meet(g.vertices[v])
        mu = g.edges.get((u, v))
        lo = 0 if mu is not None and mu.lo > 0 else cap.lo
        hi = 0 if mu is not None and mu.hi > 0 else cap.hi
        if lo > hi or hi == 0:
            continue
        edges[(u, v)] = UnitInterval(lo, hi)
    return IVFuzzyGraph(g.denominator, g.vertices, edges)


def complement_strong(g: IVFuzzyGraph) -> IVFuzzyGraph:
    """Complement of a strong graph.  Vertex memberships are kept; every pair
    joined in ``g`` loses its edge and every unjoined pair gains one at the
    endpoint minima.

    :raises NotStrongError: naming the first edge that is not at its minima.
    """
    problems = _strong_violations(g)
    if problems:
        raise NotStrongError(problems)
    return complement_raw(g)


def make_cycle(
    ids: Sequence[str],
    vertex_mu: Sequence,
    edge_mu: Sequence,
    denominator: int = DEFAULT_DENOMINATOR,
) -> IVFuzzyGraph:
    """Cycle ``ids[0] ids[1] ... ids[-1] ids[0]``; ``edge_mu[i]`` labels the
    edge from ``ids[i]`` to ``ids[(i + 1) % n]``."""
    n = len(ids)
    if n < 3:
        raise ValueError(f"a cycle needs at least 3 vertices, got {n}")
    if len(vertex_mu) != n or len(edge_mu) != n:
        raise ValueError("ids, vertex_mu and edge_mu must have the same length")
    if len(set(ids)) != n:
        raise ValueError("cycle vertex ids must be distinct")
    vertices = {vid: as_interval(mu, denominator) for vid, mu in zip(ids, vertex_mu)}
    edges = {edge_key(ids[i], ids[(i + 1) % n]): as_interval(mu, denominator) for i, mu in enumerate(edge_mu)}
    return IVFuzzyGraph.from_parts(denominator, vertices, edges)
