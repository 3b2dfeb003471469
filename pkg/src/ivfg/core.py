"""Exact membership values and the interval-valued fuzzy graph structure.

Every membership is an integer numerator over a graph-wide positive
denominator ``D``.  A graph with ``D = 100`` stores ``0.35`` as ``35``;
sums of memberships (degrees, order, size) stay integers over the same
``D`` and may exceed it.  Nothing here ever rounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, InvalidOperation
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Union

__all__ = [
    "DEFAULT_DENOMINATOR",
    "IVFGError",
    "ValidationError",
    "PrecisionError",
    "EmptyGraphError",
    "UnknownVertexError",
    "Violation",
    "UnitInterval",
    "DegreePair",
    "EdgeKey",
    "IVFuzzyGraph",
    "edge_key",
    "new_graph",
    "validate",
    "to_numerator",
    "as_interval",
    "format_scalar",
    "ivfs_union",
    "ivfs_intersection",
]

DEFAULT_DENOMINATOR = 100

Number = Union[int, str, Fraction, Decimal, float]
EdgeKey = tuple  # (u, v) with u < v


class IVFGError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(IVFGError, ValueError):
    """A graph (or an attempted change to one) breaks a structural constraint."""

    def __init__(self, violations: Iterable[Violation]):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


class PrecisionError(IVFGError, ValueError):
    """A decimal cannot be represented exactly over the graph denominator."""


class EmptyGraphError(IVFGError, ValueError):
    pass


class UnknownVertexError(IVFGError, KeyError):
    def __str__(self) -> str:
        return f"unknown vertex {self.args[0]!r}"


@dataclass(frozen=True)
class Violation:
    """One broken constraint.  ``subject`` names the vertex or edge involved."""

    kind: str
    subject: tuple
    detail: str

    def __str__(self) -> str:
        return f"{self.kind} at {'-'.join(map(str, self.subject))}: {self.detail}"


@dataclass(frozen=True, slots=True)
class UnitInterval:
    """Membership bounds ``[lo, hi]`` as numerators over the owning graph's ``D``.

    ``0 <= lo <= hi`` is enforced here; ``hi <= D`` needs the denominator and
    is checked when the interval is attached to a graph.
    """

    lo: int
    hi: int

    def __post_init__(self):
        if type(self.lo) is not int or type(self.hi) is not int:
            raise TypeError(f"numerators must be int, got {self.lo!r}, {self.hi!r}")
        if self.lo < 0 or self.lo > self.hi:
            raise ValidationError(
                [Violation("malformed_interval", (), f"need 0 <= lo <= hi, got [{self.lo}, {self.hi}]")]
            )

    @property
    def is_zero(self) -> bool:
        return self.hi == 0

    @property
    def is_positive(self) -> bool:
        # lo > 0 implies hi > 0
        return self.lo > 0

    def meet(self, other: UnitInterval) -> UnitInterval:
        return UnitInterval(min(self.lo, other.lo), min(self.hi, other.hi))

    def join(self, other: UnitInterval) -> UnitInterval:
        return UnitInterval(max(self.lo, other.lo), max(self.hi, other.hi))

    def fits_under(self, cap: UnitInterval) -> bool:
        return self.lo <= cap.lo and self.hi <= cap.hi

    def __iter__(self) -> Iterator[int]:
        yield self.lo
        yield self.hi


@dataclass(frozen=True, slots=True)
class DegreePair:
    """A (lower, upper) sum of memberships.  Used for degrees, total degrees,
    order and size.  Values may exceed ``D``."""

    lo: int
    hi: int

    def __post_init__(self):
        if self.lo < 0 or self.hi < 0:
            raise ValueError(f"degree sums are non-negative, got ({self.lo}, {self.hi})")

    @classmethod
    def of(cls, mu: UnitInterval) -> DegreePair:
        return cls(mu.lo, mu.hi)

    def __add__(self, other):
        if isinstance(other, (DegreePair, UnitInterval)):
            return DegreePair(self.lo + other.lo, self.hi + other.hi)
        return NotImplemented

    __radd__ = __add__

    def __mul__(self, k):
        if isinstance(k, int):
            return DegreePair(self.lo * k, self.hi * k)
        return NotImplemented

    __rmul__ = __mul__

    def meet(self, other: DegreePair) -> DegreePair:
        return DegreePair(min(self.lo, other.lo), min(self.hi, other.hi))

    def join(self, other: DegreePair) -> DegreePair:
        return DegreePair(max(self.lo, other.lo), max(self.hi, other.hi))

    def __iter__(self) -> Iterator[int]:
        yield self.lo
        yield self.hi


ZERO_PAIR = DegreePair(0, 0)


def to_numerator(value: Number, denominator: int) -> int:
    """Convert a membership *value* (``"0.35"``, ``Fraction(7, 20)``...) to its
    exact numerator over ``denominator``.

    Floats go through their shortest repr, so ``0.1`` means one tenth.
    Raise :class:`PrecisionError` when the value needs more resolution than
    ``denominator`` offers.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not membership values")
    try:
        if isinstance(value, float):
            exact = Fraction(Decimal(repr(value)))
        elif isinstance(value, (str, Decimal)):
            exact = Fraction(Decimal(value))
        else:
            exact = Fraction(value)
    except (InvalidOperation, ValueError, TypeError) as exc:
        raise PrecisionError(f"not a decimal or rational value: {value!r}") from exc
    scaled = exact * denominator
    if scaled.denominator != 1:
        raise PrecisionError(f"{value!r} is not representable over denominator {denominator}")
    return int(scaled)


def as_interval(mu, denominator: int) -> UnitInterval:
    """Accept a :class:`UnitInterval` (numerators) or a 2-sequence of values."""
    if isinstance(mu, UnitInterval):
        return mu
    lo, hi = mu
    return UnitInterval(to_numerator(lo, denominator), to_numerator(hi, denominator))


def format_scalar(numerator: int, denominator: int) -> str:
    """Render ``numerator/denominator`` as a finite decimal when possible,
    otherwise as a reduced fraction.  Integral values keep one decimal."""
    q = Fraction(numerator, denominator)
    d = q.denominator
    twos = fives = 0
    while d % 2 == 0:
        d //= 2
        twos += 1
    while d % 5 == 0:
        d //= 5
        fives += 1
    if d != 1:
        return f"{q.numerator}/{q.denominator}"
    places = max(twos, fives, 1)
    text = f"{Decimal(q.numerator) / Decimal(q.denominator):.{places}f}"
    return text


def edge_key(u: str, v: str) -> EdgeKey:
    if u == v:
        raise ValidationError([Violation("self_loop", (u,), "self-loops are not allowed")])
    return (u, v) if u < v else (v, u)


def _check_id(vid) -> None:
    if not isinstance(vid, str):
        raise TypeError(f"vertex ids are strings, got {vid!r}")


class IVFuzzyGraph:
    """An undirected interval-valued fuzzy graph ``(A, B)``.

    Instances are immutable.  :meth:`add_vertex` and :meth:`add_edge` return a
    new graph and refuse any change that would break the edge constraint
    ``B(xy) <= min(A(x), A(y))`` on either bound.

    >>> g = new_graph(10).add_vertex("a", ("0.4", "0.5")).add_vertex("b", ("0.5", "0.6"))
    >>> g = g.add_edge("b", "a", ("0.3", "0.4"))
    >>> g.edge("a", "b")
    UnitInterval(lo=3, hi=4)
    """

    __slots__ = ("_denominator", "_vertices", "_edges", "_cache")

    def __init__(self, denominator: int = DEFAULT_DENOMINATOR, vertices=None, edges=None):
        if type(denominator) is not int or denominator < 1:
            raise ValueError(f"denominator must be a positive integer, got {denominator!r}")
        self._denominator = denominator
        self._vertices: dict = dict(vertices or {})
        self._edges: dict = dict(edges or {})
        self._cache: dict = {}

    @classmethod
    def from_parts(cls, denominator: int, vertices: Mapping, edges: Mapping, check: bool = True) -> IVFuzzyGraph:
        """Build from prepared maps.  Edge keys are canonicalised.  With
        ``check`` the result must pass :func:`validate`; without it, the caller
        vouches for the data (used by generators and loaders)."""
        canon = {}
        for (u, v), mu in edges.items():
            canon[edge_key(u, v)] = mu
        g = cls(denominator, vertices, canon)
        if check:
            problems = validate(g)
            if problems:
                raise ValidationError(problems)
        return g

    # -- read access -------------------------------------------------------

    @property
    def denominator(self) -> int:
        return self._denominator

    @property
    def vertices(self) -> Mapping[str, UnitInterval]:
        return MappingProxyType(self._vertices)

    @property
    def edges(self) -> Mapping[EdgeKey, UnitInterval]:
        return MappingProxyType(self._edges)

    def __len__(self) -> int:
        return len(self._vertices)

    def __contains__(self, vid) -> bool:
        return vid in self._vertices

    def vertex(self, vid: str) -> UnitInterval:
        try:
            return self._vertices[vid]
        except KeyError:
            raise UnknownVertexError(vid) from None

    def edge(self, u: str, v: str) -> UnitInterval | None:
        if u == v:
            return None
        return self._edges.get(edge_key(u, v))

    def sorted_vertices(self) -> list[str]:
        return sorted(self._vertices)

    def sorted_edges(self) -> list[EdgeKey]:
        return sorted(self._edges)

    def neighbours(self, vid: str) -> tuple[str, ...]:
        """Endpoints sharing an edge with ``vid``, in id order."""
        adj = self._cache.get("adj")
        if adj is None:
            table: dict = {v: [] for v in self._vertices}
            for u, v in self._edges:
                table[u].append(v)
                table[v].append(u)
            adj = {v: tuple(sorted(ns)) for v, ns in table.items()}
            self._cache["adj"] = adj
        if vid not in adj:
            raise UnknownVertexError(vid)
        return adj[vid]

    def interval(self, lo: Number, hi: Number) -> UnitInterval:
        """Parse two decimal values into an interval over this graph's ``D``."""
        return as_interval((lo, hi), self._denominator)

    def pair(self, lo: Number, hi: Number) -> DegreePair:
        return DegreePair(to_numerator(lo, self._denominator), to_numerator(hi, self._denominator))

    # -- construction ------------------------------------------------------

    def add_vertex(self, vid: str, mu) -> IVFuzzyGraph:
        _check_id(vid)
        if vid in self._vertices:
            raise ValidationError([Violation("duplicate_vertex", (vid,), "vertex already present")])
        mu = as_interval(mu, self._denominator)
        if mu.hi > self._denominator:
            raise ValidationError([Violation("out_of_range", (vid,), f"upper bound {mu.hi}/{self._denominator} exceeds 1")])
        vertices = dict(self._vertices)
        vertices[vid] = mu
        return IVFuzzyGraph(self._denominator, vertices, self._edges)

    def add_edge(self, u: str, v: str, mu) -> IVFuzzyGraph:
        _check_id(u)
        _check_id(v)
        key = edge_key(u, v)
        missing = [w for w in key if w not in self._vertices]
        if missing:
            raise ValidationError([Violation("missing_endpoint", (w,), "endpoint not in graph") for w in missing])
        if key in self._edges:
            raise ValidationError([Violation("duplicate_edge", key, "edge already present")])
        mu = as_interval(mu, self._denominator)
        problems = _edge_violations(key, mu, self._vertices)
        if problems:
            raise ValidationError(problems)
        edges = dict(self._edges)
        edges[key] = mu
        return IVFuzzyGraph(self._denominator, self._vertices, edges)

    # -- value semantics ---------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, IVFuzzyGraph):
            return NotImplemented
        return (
            self._denominator == other._denominator
            and self._vertices == other._vertices
            and self._edges == other._edges
        )

    def __hash__(self):
        return hash((self._denominator, frozenset(self._vertices.items()), frozenset(self._edges.items())))

    def __repr__(self):
        return f"IVFuzzyGraph(D={self._denominator}, |V|={len(self._vertices)}, |E|={len(self._edges)})"


def _edge_violations(key: EdgeKey, mu: UnitInterval, vertices: Mapping) -> list[Violation]:
    out = []
    a, b = vertices[key[0]], vertices[key[1]]
    if mu.lo > min(a.lo, b.lo):
        tight = key[0] if a.lo <= b.lo else key[1]
        out.append(Violation("lower_bound", key, f"lower {mu.lo} exceeds lower bound {min(a.lo, b.lo)} of {tight}"))
    if mu.hi > min(a.hi, b.hi):
        tight = key[0] if a.hi <= b.hi else key[1]
        out.append(Violation("upper_bound", key, f"upper {mu.hi} exceeds upper bound {min(a.hi, b.hi)} of {tight}"))
    return out


def new_graph(denominator: int = DEFAULT_DENOMINATOR) -> IVFuzzyGraph:
    return IVFuzzyGraph(denominator)


def validate(g: IVFuzzyGraph) -> list[Violation]:
    """Every broken structural invariant of ``g``; empty when ``g`` is sound."""
    out: list[Violation] = []
    D = g.denominator
    for vid in g.sorted_vertices():
        mu = g.vertices[vid]
        if mu.hi > D:
            out.append(Violation("out_of_range", (vid,), f"upper bound {mu.hi}/{D} exceeds 1"))
    for key in g.sorted_edges():
        u, v = key
        mu = g.edges[key]
        if not (u < v):
            out.append(Violation("self_loop" if u == v else "orientation", key, "edge key is not canonical"))
            continue
        missing = [w for w in key if w not in g.vertices]
        if missing:
            out.extend(Violation("missing_endpoint", (w,), f"edge {u}-{v} names unknown vertex") for w in missing)
            continue
        if mu.hi > D:
            out.append(Violation("out_of_range", key, f"upper bound {mu.hi}/{D} exceeds 1"))
        out.extend(_edge_violations(key, mu, g.vertices))
    return out


def _pointwise(a: Mapping, b: Mapping, op: str, denominators) -> dict:
    if denominators is not None and denominators[0] != denominators[1]:
        raise ValueError(f"denominators differ: {denominators[0]} vs {denominators[1]}")
    if a.keys() != b.keys():
        raise ValueError("interval-valued fuzzy sets must share the same support keys")
    return {k: getattr(a[k], op)(b[k]) for k in a}


def ivfs_union(a: Mapping[str, UnitInterval], b: Mapping[str, UnitInterval], *, denominators=None) -> dict[str, UnitInterval]:
    """Pointwise max on both bounds.

    Numerators are only comparable over a shared denominator; pass
    ``denominators=(Da, Db)`` to have that checked.
    """
    return _pointwise(a, b, "join", denominators)


def ivfs_intersection(a: Mapping[str, UnitInterval], b: Mapping[str, UnitInterval], *, denominators=None) -> dict[str, UnitInterval]:
    """Pointwise min on both bounds."""
    return _pointwise(a, b, "meet", denominators)
