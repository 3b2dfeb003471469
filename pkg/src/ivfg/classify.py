"""Graph-class predicates and the bundled :class:`ClassificationReport`.

Two degree pairs are *distinct* when their lower bounds differ or their
upper bounds differ.  Adjacency means sharing an edge of the graph (zero
memberships included); connectivity is decided on the underlying crisp
graph.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from itertools import combinations

from .core import DegreePair, EmptyGraphError, IVFuzzyGraph
from .metrics import degrees, total_degrees
from .transform import underlying_crisp

__all__ = [
    "ClassificationReport",
    "classify",
    "is_complete",
    "is_strong",
    "is_connected",
    "regular_constants",
    "totally_regular_constants",
    "is_irregular",
    "is_totally_irregular",
    "is_neighbourly_irregular",
    "is_neighbourly_total_irregular",
    "is_highly_irregular",
    "all_degrees_distinct",
    "has_constant_vertex_membership",
]


def is_complete(g: IVFuzzyGraph) -> bool:
    """Every pair of distinct vertices is joined at the endpoint minima."""
    vs = g.sorted_vertices()
    for u, v in combinations(vs, 2):
        if g.edges.get((u, v)) != g.vertices[u].meet(g.vertices[v]):
            return False
    return True


def is_strong(g: IVFuzzyGraph) -> bool:
    """Every existing edge sits at its endpoint minima; missing pairs are free."""
    return all(mu == g.vertices[u].meet(g.vertices[v]) for (u, v), mu in g.edges.items())


def is_connected(g: IVFuzzyGraph) -> bool:
    return underlying_crisp(g).is_connected()


def _common(values) -> DegreePair | None:
    it = iter(values)
    first = next(it)
    return first if all(p == first for p in it) else None


def regular_constants(g: IVFuzzyGraph) -> DegreePair | None:
    """The shared degree pair when all vertices agree, else ``None``."""
    if not len(g):
        raise EmptyGraphError("regularity of an empty graph is undefined")
    return _common(degrees(g).values())


def totally_regular_constants(g: IVFuzzyGraph) -> DegreePair | None:
    if not len(g):
        raise EmptyGraphError("total regularity of an empty graph is undefined")
    return _common(total_degrees(g).values())


def is_irregular(g: IVFuzzyGraph) -> bool:
    """Some edge joins two vertices of distinct degree."""
    d = degrees(g)
    return any(d[u] != d[v] for u, v in g.edges)


def is_totally_irregular(g: IVFuzzyGraph) -> bool:
    td = total_degrees(g)
    return any(td[u] != td[v] for u, v in g.edges)


def is_neighbourly_irregular(g: IVFuzzyGraph) -> bool:
    """Every edge joins two vertices of distinct degree (vacuous when edgeless)."""
    d = degrees(g)
    return all(d[u] != d[v] for u, v in g.edges)


def is_neighbourly_total_irregular(g: IVFuzzyGraph) -> bool:
    td = total_degrees(g)
    return all(td[u] != td[v] for u, v in g.edges)


def is_highly_irregular(g: IVFuzzyGraph, strict: bool = False) -> bool:
    """Each vertex is adjacent to vertices with distinct degrees.

    Default reading: every vertex with two or more neighbours sees at least
    two different degree pairs among them.  With ``strict=True`` the
    neighbours' degree pairs must be pairwise distinct.  Vertices with at
    most one neighbour pass either way.
    """
    d = degrees(g)
    for v in g.vertices:
        ns = g.neighbours(v)
        if len(ns) < 2:
            continue
        seen = {d[w] for w in ns}
        if strict and len(seen) != len(ns):
            return False
        if len(seen) < 2:
            return False
    return True


def all_degrees_distinct(g: IVFuzzyGraph) -> bool:
    d = list(degrees(g).values())
    return len(set(d)) == len(d)


def has_constant_vertex_membership(g: IVFuzzyGraph) -> bool:
    return len(set(g.vertices.values())) <= 1


@dataclass
class ClassificationReport:
    connected: bool
    complete: bool
    strong: bool
    regular: DegreePair | None
    totally_regular: DegreePair | None
    irregular: bool
    totally_irregular: bool
    neighbourly_irregular: bool
    neighbourly_total_irregular: bool
    highly_irregular: bool
    highly_irregular_strict: bool
    errata_notes: list[str] = field(default_factory=list)

    FLAGS = (
        "connected",
        "complete",
        "strong",
        "irregular",
        "totally_irregular",
        "neighbourly_irregular",
        "neighbourly_total_irregular",
        "highly_irregular",
        "highly_irregular_strict",
    )

    def to_dict(self) -> dict:
        out = asdict(self)
        for name in ("regular", "totally_regular"):
            pair = getattr(self, name)
            out[name] = None if pair is None else [pair.lo, pair.hi]
        return out


def classify(g: IVFuzzyGraph) -> ClassificationReport:
    """Evaluate every predicate.  Never raises; caveats go to ``errata_notes``."""
    notes = []
    connected = is_connected(g)
    if not connected:
        notes.append(
            "graph is not connected: neighbourly and highly irregular are defined for "
            "connected graphs and were evaluated on each component's edges anyway"
        )
    if len(g):
        regular = regular_constants(g)
        totally = totally_regular_constants(g)
    else:
        regular = totally = None
        notes.append("empty graph: no common degree exists, regularity left unset")
    return ClassificationReport(
        connected=connected,
        complete=is_complete(g),
        strong=is_strong(g),
        regular=regular,
        totally_regular=totally,
        irregular=is_irregular(g),
        totally_irregular=is_totally_irregular(g),
        neighbourly_irregular=is_neighbourly_irregular(g),
        neighbourly_total_irregular=is_neighbourly_total_irregular(g),
        highly_irregular=is_highly_irregular(g),
        highly_irregular_strict=is_highly_irregular(g, strict=True),
        errata_notes=notes,
    )
