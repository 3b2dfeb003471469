"""Deterministic enumeration and seeded random generation over membership grids.

A :class:`Grid` quantises ``[0, 1]`` to a handful of numerators over one
denominator.  Enumeration is over *labeled* graphs on ``v1 .. vn``; all
predicates are isomorphism-invariant so the redundancy costs time only.

Random graphs use :class:`random.Random` (MT19937) seeded with an integer;
the sequence of draws is fixed, so a seed reproduces the same graph on any
platform.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Iterator

from .core import (
    DEFAULT_DENOMINATOR,
    IVFuzzyGraph,
    UnitInterval,
    to_numerator,
)
from .transform import make_cycle, underlying_crisp

__all__ = [
    "Grid",
    "EnumSpec",
    "vertex_ids",
    "edge_options",
    "enumerate_graphs",
    "count_graphs",
    "random_graph",
    "random_regular_cycle",
    "make_regular_cycle",
    "enumerate_cycles",
]


@dataclass(frozen=True)
class Grid:
    """Allowed membership numerators over ``denominator``, sorted and unique."""

    denominator: int
    numerators: tuple[int, ...]

    def __post_init__(self):
        nums = tuple(self.numerators)
        if self.denominator < 1:
            raise ValueError("grid denominator must be positive")
        if not nums:
            raise ValueError("grid needs at least one value")
        if list(nums) != sorted(set(nums)):
            raise ValueError(f"grid numerators must be sorted and unique: {nums}")
        if nums[0] < 0 or nums[-1] > self.denominator:
            raise ValueError(f"grid values must lie in [0, 1]: {nums}")
        object.__setattr__(self, "numerators", nums)

    @classmethod
    def parse(cls, values, denominator: int | None = None) -> Grid:
        """``Grid.parse("0,0.5,1")`` picks the smallest denominator that holds
        every value exactly unless one is given."""
        if isinstance(values, str):
            values = [v.strip() for v in values.split(",") if v.strip()]
        fracs = [Fraction(v) for v in values]
        if denominator is None:
            denominator = math.lcm(*(f.denominator for f in fracs))
        nums = sorted({to_numerator(f, denominator) for f in fracs})
        return cls(denominator, tuple(nums))

    @property
    def top(self) -> int:
        return self.numerators[-1]

    def intervals(self, include_zero: bool = True) -> list[UnitInterval]:
        """Every ``[lo, hi]`` with ``lo <= hi`` from the grid, lexicographic."""
        out = [UnitInterval(a, b) for a in self.numerators for b in self.numerators if a <= b]
        if not include_zero:
            out = [iv for iv in out if iv.hi > 0]
        return out

    def __str__(self) -> str:
        return ",".join(str(Fraction(n, self.denominator)) for n in self.numerators)


@dataclass(frozen=True)
class EnumSpec:
    vertex_count: int
    grid: Grid
    require_connected: bool = False
    require_strong: bool = False
    zero_edges_as_absent: bool = True

    def __post_init__(self):
        if self.vertex_count < 1:
            raise ValueError("vertex_count must be at least 1")


def vertex_ids(n: int) -> list[str]:
    """``v1 .. vn``, zero-padded so string order matches numeric order."""
    width = len(str(n))
    return [f"v{i:0{width}d}" for i in range(1, n + 1)]


def edge_options(cap: UnitInterval, grid: Grid, require_strong: bool = False,
                 zero_edges_as_absent: bool = True) -> list[UnitInterval | None]:
    """Choices for one vertex pair whose endpoint minima are ``cap``.
    ``None`` (absent) always comes first."""
    if require_strong:
        fits = [cap]
    else:
        fits = [iv for iv in grid.intervals() if iv.fits_under(cap)]
    if zero_edges_as_absent:
        fits = [iv for iv in fits if iv.hi > 0]
    return [None, *fits]


def enumerate_graphs(spec: EnumSpec) -> Iterator[IVFuzzyGraph]:
    """Every labeled graph on ``spec.vertex_count`` vertices over the grid.

    Order: vertex assignments lexicographic in grid-interval order, then
    edge choices per pair (pairs in id order, last pair fastest).  The same
    spec always yields the same sequence.
    """
    ids = vertex_ids(spec.vertex_count)
    pairs = list(combinations(ids, 2))
    D = spec.grid.denominator
    for vmu in product(spec.grid.intervals(), repeat=len(ids)):
        vertices = dict(zip(ids, vmu))
        options = [
            edge_options(vertices[u].meet(vertices[v]), spec.grid, spec.require_strong, spec.zero_edges_as_absent)
            for u, v in pairs
        ]
        for choice in product(*options):
            edges = {p: mu for p, mu in zip(pairs, choice) if mu is not None}
            g = IVFuzzyGraph(D, vertices, edges)
            if spec.require_connected and not underlying_crisp(g).is_connected():
                continue
            yield g


def count_graphs(spec: EnumSpec) -> int:
    """Number of graphs :func:`enumerate_graphs` yields when connectivity is
    not required; closed-form product per vertex assignment."""
    if spec.require_connected:
        return sum(1 for _ in enumerate_graphs(spec))
    pairs = list(combinations(range(spec.vertex_count), 2))
    total = 0
    for vmu in product(spec.grid.intervals(), repeat=spec.vertex_count):
        total += math.prod(
            len(edge_options(vmu[i].meet(vmu[j]), spec.grid, spec.require_strong, spec.zero_edges_as_absent))
            for i, j in pairs
        )
    return total


def random_graph(n: int, grid: Grid, edge_prob, seed=None, *, constant_vertices: bool = False,
                 rng: random.Random | None = None) -> IVFuzzyGraph:
    """Labeled graph with grid memberships.

    Vertex memberships are uniform over grid intervals (one shared draw when
    ``constant_vertices``).  Each pair independently gets an edge with
    probability ``edge_prob`` (a rational, decided exactly), its membership
    uniform over the nonzero grid intervals under the endpoint minima.
    Pass ``rng`` to draw from an existing stream instead of ``seed``.
    """
    p = Fraction(edge_prob)
    if not 0 <= p <= 1:
        raise ValueError(f"edge_prob must lie in [0, 1], got {edge_prob}")
    if rng is None:
        rng = random.Random(seed)
    ids = vertex_ids(n) if n else []
    ivs = grid.intervals()
    if constant_vertices:
        mu = rng.choice(ivs)
        vertices = {v: mu for v in ids}
    else:
        vertices = {v: rng.choice(ivs) for v in ids}
    nonzero = grid.intervals(include_zero=False)
    edges = {}
    for u, v in combinations(ids, 2):
        if rng.randrange(p.denominator) >= p.numerator:
            continue
        cap = vertices[u].meet(vertices[v])
        fits = [iv for iv in nonzero if iv.fits_under(cap)]
        if fits:
            edges[(u, v)] = rng.choice(fits)
    return IVFuzzyGraph(grid.denominator, vertices, edges)


def make_regular_cycle(n: int, k_lo: int, k_hi: int, split: tuple[int, int],
                       denominator: int = DEFAULT_DENOMINATOR) -> IVFuzzyGraph:
    """Even cycle whose degree pair is ``(k_lo, k_hi)`` at every vertex.

    Arguments are numerators over ``denominator``.  ``split = (c_lo, c_hi)``
    labels the odd edges ``e1, e3, ...``; even edges take the remainder
    ``(k_lo - c_lo, k_hi - c_hi)``.  Vertices sit at ``[1, 1]``.
    """
    if n < 4 or n % 2:
        raise ValueError(f"need an even cycle length >= 4, got {n}")
    c_lo, c_hi = split
    odd = UnitInterval(c_lo, c_hi)
    even = UnitInterval(k_lo - c_lo, k_hi - c_hi)
    for mu in (odd, even):
        if mu.hi > denominator:
            raise ValueError(f"edge membership [{mu.lo}, {mu.hi}] exceeds 1")
    ids = vertex_ids(n)
    top = UnitInterval(denominator, denominator)
    return make_cycle(ids, [top] * n, [odd if i % 2 == 0 else even for i in range(n)], denominator)


def random_regular_cycle(rng: random.Random, grid: Grid, max_n: int = 12) -> IVFuzzyGraph:
    """A :func:`make_regular_cycle` instance with length, degree pair and split
    drawn from ``rng``; odd and even edge memberships are grid intervals."""
    lengths = list(range(4, max_n + 1, 2))
    ivs = grid.intervals(include_zero=False)
    n = rng.choice(lengths)
    odd = rng.choice(ivs)
    even = rng.choice(ivs)
    return make_regular_cycle(n, odd.lo + even.lo, odd.hi + even.hi, (odd.lo, odd.hi), grid.denominator)


def enumerate_cycles(n: int, grid: Grid, vertex_mu: UnitInterval | None = None,
                     include_zero: bool = False) -> Iterator[IVFuzzyGraph]:
    """Every labeling of the cycle ``v1 .. vn v1`` by grid intervals, vertices
    fixed at ``vertex_mu`` (default ``[1, 1]``)."""
    D = grid.denominator
    if vertex_mu is None:
        vertex_mu = UnitInterval(D, D)
    ids = vertex_ids(n)
    ivs = [iv for iv in grid.intervals(include_zero) if iv.fits_under(vertex_mu)]
    for labels in product(ivs, repeat=n):
        yield make_cycle(ids, [vertex_mu] * n, list(labels), D)
