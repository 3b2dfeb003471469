"""Degree, total degree, order and size, all as exact :class:`DegreePair` sums."""

from __future__ import annotations

from functools import reduce

from .core import DegreePair, EmptyGraphError, IVFuzzyGraph, UnknownVertexError

__all__ = [
    "degree",
    "degrees",
    "total_degree",
    "total_degrees",
    "order",
    "size",
    "min_degree",
    "max_degree",
]


def degrees(g: IVFuzzyGraph) -> dict[str, DegreePair]:
    """Degree of every vertex.  Computed once per graph and cached."""
    table = g._cache.get("deg")
    if table is None:
        lo = dict.fromkeys(g.vertices, 0)
        hi = dict.fromkeys(g.vertices, 0)
        for (u, v), mu in g.edges.items():
            lo[u] += mu.lo
            lo[v] += mu.lo
            hi[u] += mu.hi
            hi[v] += mu.hi
        table = {v: DegreePair(lo[v], hi[v]) for v in g.vertices}
        g._cache["deg"] = table
    return table


def degree(g: IVFuzzyGraph, u: str) -> DegreePair:
    """Sum of incident edge memberships, lower and upper bound separately."""
    try:
        return degrees(g)[u]
    except KeyError:
        raise UnknownVertexError(u) from None


def total_degrees(g: IVFuzzyGraph) -> dict[str, DegreePair]:
    table = g._cache.get("tdeg")
    if table is None:
        table = {v: d + g.vertices[v] for v, d in degrees(g).items()}
        g._cache["tdeg"] = table
    return table


def total_degree(g: IVFuzzyGraph, u: str) -> DegreePair:
    """Degree plus the vertex's own membership, reported lower bound first."""
    try:
        return total_degrees(g)[u]
    except KeyError:
        raise UnknownVertexError(u) from None


def order(g: IVFuzzyGraph) -> DegreePair:
    return DegreePair(sum(mu.lo for mu in g.vertices.values()), sum(mu.hi for mu in g.vertices.values()))


def size(g: IVFuzzyGraph) -> DegreePair:
    """Each undirected edge counted once."""
    return DegreePair(sum(mu.lo for mu in g.edges.values()), sum(mu.hi for mu in g.edges.values()))


def min_degree(g: IVFuzzyGraph) -> DegreePair:
    """Componentwise minimum over all vertex degrees."""
    if not len(g):
        raise EmptyGraphError("minimum degree of an empty graph")
    return reduce(DegreePair.meet, degrees(g).values())


def max_degree(g: IVFuzzyGraph) -> DegreePair:
    if not len(g):
        raise EmptyGraphError("maximum degree of an empty graph")
    return reduce(DegreePair.join, degrees(g).values())
