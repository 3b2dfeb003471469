"""Per-instance checks of the five theorems.

Each ``check_*`` returns a :class:`Verdict`: ``skipped`` when the instance
does not meet the theorem's hypothesis, otherwise ``confirmed`` or
``violated`` with an explanation that names the offending quantities.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..classify import (
    all_degrees_distinct,
    has_constant_vertex_membership,
    is_connected,
    is_highly_irregular,
    is_neighbourly_irregular,
    is_neighbourly_total_irregular,
    regular_constants,
    totally_regular_constants,
)
from ..core import IVFuzzyGraph, format_scalar
from ..metrics import degrees, order, size
from ..transform import underlying_crisp

__all__ = [
    "Verdict",
    "SKIPPED",
    "CONFIRMED",
    "VIOLATED",
    "HandshakeError",
    "assert_handshake",
    "check_theorem1",
    "check_theorem2",
    "check_theorem3",
    "check_theorem4_forward",
    "check_theorem4_converse",
    "check_theorem5",
    "CHECKS",
]

SKIPPED = "skipped"
CONFIRMED = "confirmed"
VIOLATED = "violated"


@dataclass(frozen=True)
class Verdict:
    status: str
    explanation: str = ""

    @property
    def violated(self) -> bool:
        return self.status == VIOLATED


class HandshakeError(AssertionError):
    """Degree sum and twice the size disagree: an arithmetic defect."""


def assert_handshake(g: IVFuzzyGraph) -> None:
    d = degrees(g).values()
    s = size(g)
    total_lo = sum(p.lo for p in d)
    total_hi = sum(p.hi for p in d)
    if (total_lo, total_hi) != (2 * s.lo, 2 * s.hi):
        raise HandshakeError(f"sum of degrees ({total_lo}, {total_hi}) != 2 * size ({2 * s.lo}, {2 * s.hi})")


def _fmt(pair, D) -> str:
    return f"({format_scalar(pair[0], D)}, {format_scalar(pair[1], D)})"


def _period_two(values: list[int]) -> bool:
    n = len(values)
    return all(values[i] == values[(i + 2) % n] for i in range(n))


def check_theorem1(g: IVFuzzyGraph) -> Verdict:
    """On an even cycle, regular iff each bound of the edge memberships is
    constant or alternates with period 2 along the cycle.

    Applies only when every vertex and edge lies in the crisp graph and that
    graph is a single cycle of even length; a zero-lower-bound chord would
    add degree without being part of the cycle.
    """
    crisp = underlying_crisp(g)
    if len(crisp.vertices) != len(g) or len(crisp.edges) != len(g.edges):
        return Verdict(SKIPPED, "some vertex or edge has a zero bound")
    walk = crisp.cycle_order()
    if walk is None or len(walk) % 2:
        return Verdict(SKIPPED, "crisp graph is not an even cycle")
    n = len(walk)
    cycle = [g.edge(walk[i], walk[(i + 1) % n]) for i in range(n)]
    lo_ok = _period_two([mu.lo for mu in cycle])
    hi_ok = _period_two([mu.hi for mu in cycle])
    regular = regular_constants(g) is not None
    if regular == (lo_ok and hi_ok):
        return Verdict(CONFIRMED)
    D = g.denominator
    labels = " ".join(_fmt(tuple(mu), D) for mu in cycle)
    return Verdict(
        VIOLATED,
        f"regular={regular} but lower alternates={lo_ok}, upper alternates={hi_ok}; cycle {'-'.join(walk)} edges {labels}",
    )


def check_theorem2(g: IVFuzzyGraph) -> Verdict:
    """A (k1, k2)-regular graph on P vertices has size (P k1 / 2, P k2 / 2).
    Compared as ``2 S = P k`` so no halving is needed."""
    if not len(g):
        return Verdict(SKIPPED, "empty graph")
    k = regular_constants(g)
    if k is None:
        return Verdict(SKIPPED, "not regular")
    P = len(g)
    s = size(g)
    if (2 * s.lo, 2 * s.hi) == (P * k.lo, P * k.hi):
        return Verdict(CONFIRMED)
    D = g.denominator
    return Verdict(VIOLATED, f"size {_fmt(tuple(s), D)} but P*k/2 = {_fmt((P * k.lo, P * k.hi), 2 * D)}")


def check_theorem3(g: IVFuzzyGraph) -> Verdict:
    """A totally regular graph with common total degree (k, k') satisfies
    ``2 S + O = (P k, P k')``."""
    if not len(g):
        return Verdict(SKIPPED, "empty graph")
    k = totally_regular_constants(g)
    if k is None:
        return Verdict(SKIPPED, "not totally regular")
    P = len(g)
    lhs = 2 * size(g) + order(g)
    if (lhs.lo, lhs.hi) == (P * k.lo, P * k.hi):
        return Verdict(CONFIRMED)
    D = g.denominator
    return Verdict(VIOLATED, f"2S+O = {_fmt(tuple(lhs), D)} but P*k = {_fmt((P * k.lo, P * k.hi), D)}")


def check_theorem4_forward(g: IVFuzzyGraph) -> Verdict:
    """Connected with all degree pairs distinct implies neighbourly irregular
    and highly irregular.  The strict reading of highly irregular is checked;
    it implies the default one."""
    if not is_connected(g):
        return Verdict(SKIPPED, "not connected")
    if not all_degrees_distinct(g):
        return Verdict(SKIPPED, "two vertices share a degree pair")
    ni = is_neighbourly_irregular(g)
    hi = is_highly_irregular(g, strict=True)
    if ni and hi:
        return Verdict(CONFIRMED)
    return Verdict(VIOLATED, f"all degrees distinct but neighbourly_irregular={ni}, highly_irregular_strict={hi}")


def check_theorem4_converse(g: IVFuzzyGraph, strict: bool = False) -> Verdict:
    """Connected, highly irregular and neighbourly irregular implies all
    degree pairs distinct.  A violation is a counterexample to the claim."""
    if not is_connected(g):
        return Verdict(SKIPPED, "not connected")
    if not (is_neighbourly_irregular(g) and is_highly_irregular(g, strict=strict)):
        return Verdict(SKIPPED, "not both highly and neighbourly irregular")
    if all_degrees_distinct(g):
        return Verdict(CONFIRMED)
    d = degrees(g)
    by_pair: dict = {}
    for v in g.sorted_vertices():
        by_pair.setdefault(d[v], []).append(v)
    clash = next(vs for vs in by_pair.values() if len(vs) > 1)
    pair = d[clash[0]]
    return Verdict(
        VIOLATED,
        f"vertices {', '.join(clash)} share degree {_fmt(tuple(pair), g.denominator)} and are not adjacent",
    )


def check_theorem5(g: IVFuzzyGraph) -> Verdict:
    """Neighbourly irregular with one membership shared by every vertex
    implies neighbourly total irregular."""
    if not len(g) or not has_constant_vertex_membership(g):
        return Verdict(SKIPPED, "vertex memberships are not constant")
    if not is_neighbourly_irregular(g):
        return Verdict(SKIPPED, "not neighbourly irregular")
    if is_neighbourly_total_irregular(g):
        return Verdict(CONFIRMED)
    return Verdict(VIOLATED, "neighbourly irregular with constant vertices but some edge joins equal total degrees")


CHECKS = {
    "1": check_theorem1,
    "2": check_theorem2,
    "3": check_theorem3,
    "4": check_theorem4_forward,
    "4c": check_theorem4_converse,
    "5": check_theorem5,
}
