"""Graph documents (JSON) and DOT export.

A document stores integer numerators and one denominator::

    {
      "format_version": 1,
      "denominator": 10,
      "vertices": [
        {"id": "a", "mu": [4, 5]},
        {"id": "b", "mu": [5, 6]}
      ],
      "edges": [
        {"u": "a", "v": "b", "mu": [3, 4]}
      ]
    }

On input a ``mu`` entry may also be a decimal string (``"0.35"``) or a JSON
decimal literal; it is converted exactly or rejected.  Output is canonical:
vertices sorted by id, edges by their ``(u, v)`` key with ``u < v``.
"""

from __future__ import annotations

import json
from decimal import Decimal

from .core import (
    IVFGError,
    IVFuzzyGraph,
    PrecisionError,
    UnitInterval,
    ValidationError,
    Violation,
    format_scalar,
    to_numerator,
    validate,
)

__all__ = [
    "FORMAT_VERSION",
    "DocumentError",
    "graph_to_document",
    "document_to_graph",
    "write_graph",
    "read_graph",
    "export_dot",
]

FORMAT_VERSION = 1


class DocumentError(IVFGError, ValueError):
    """The bytes are not a well-formed graph document."""


def graph_to_document(g: IVFuzzyGraph) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "denominator": g.denominator,
        "vertices": [{"id": v, "mu": [g.vertices[v].lo, g.vertices[v].hi]} for v in g.sorted_vertices()],
        "edges": [{"u": u, "v": v, "mu": [g.edges[(u, v)].lo, g.edges[(u, v)].hi]} for u, v in g.sorted_edges()],
    }


def _dump_document(doc: dict) -> str:
    def block(items):
        if not items:
            return "[]"
        return "[\n" + ",\n".join("    " + json.dumps(it, ensure_ascii=False) for it in items) + "\n  ]"

    return (
        "{\n"
        f'  "format_version": {doc["format_version"]},\n'
        f'  "denominator": {doc["denominator"]},\n'
        f'  "vertices": {block(doc["vertices"])},\n'
        f'  "edges": {block(doc["edges"])}\n'
        "}\n"
    )


def write_graph(g: IVFuzzyGraph) -> bytes:
    """Canonical UTF-8 serialisation; equal graphs give identical bytes."""
    return _dump_document(graph_to_document(g)).encode("utf-8")


def _numerator(raw, D: int, where: str) -> int:
    if isinstance(raw, bool):
        raise DocumentError(f"{where}: booleans are not memberships")
    if isinstance(raw, int):
        return raw
    if isinstance(raw, (str, Decimal)):
        try:
            return to_numerator(raw, D)
        except PrecisionError as exc:
            raise DocumentError(f"{where}: {exc}") from None
    raise DocumentError(f"{where}: membership must be an integer numerator or a decimal string, got {raw!r}")


def _interval(raw, D: int, subject: tuple, where: str, problems: list):
    if not isinstance(raw, list) or len(raw) != 2:
        raise DocumentError(f"{where}: mu must be a two-element list")
    lo, hi = (_numerator(x, D, where) for x in raw)
    try:
        return UnitInterval(lo, hi)
    except ValidationError:
        problems.append(Violation("malformed_interval", subject, f"need 0 <= lo <= hi <= {D}, got [{lo}, {hi}]"))
        return None


def document_to_graph(doc) -> IVFuzzyGraph:
    """Build and validate a graph from a parsed document.

    :raises DocumentError: shape problems (missing keys, wrong types,
        unrepresentable decimals, unknown endpoints).
    :raises ValidationError: every constraint violation found, by identity.
    """
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    version = doc.get("format_version", FORMAT_VERSION)
    if version != FORMAT_VERSION:
        raise DocumentError(f"unsupported format_version {version!r}")
    D = doc.get("denominator")
    if isinstance(D, bool) or not isinstance(D, int) or D < 1:
        raise DocumentError(f"denominator must be a positive integer, got {D!r}")
    raw_vertices = doc.get("vertices", [])
    raw_edges = doc.get("edges", [])
    if not isinstance(raw_vertices, list) or not isinstance(raw_edges, list):
        raise DocumentError("vertices and edges must be lists")

    problems: list[Violation] = []
    vertices: dict = {}
    for i, item in enumerate(raw_vertices):
        if not isinstance(item, dict) or not isinstance(item.get("id"), str):
            raise DocumentError(f"vertices[{i}] needs a string id")
        vid = item["id"]
        if vid in vertices:
            problems.append(Violation("duplicate_vertex", (vid,), "vertex listed twice"))
            continue
        mu = _interval(item.get("mu"), D, (vid,), f"vertex {vid!r}", problems)
        if mu is not None:
            vertices[vid] = mu

    edges: dict = {}
    for i, item in enumerate(raw_edges):
        if not isinstance(item, dict) or not isinstance(item.get("u"), str) or not isinstance(item.get("v"), str):
            raise DocumentError(f"edges[{i}] needs string endpoints u and v")
        u, v = item["u"], item["v"]
        for w in (u, v):
            if w not in vertices and all(w != x.get("id") for x in raw_vertices):
                raise DocumentError(f"edge {u}-{v} references unknown vertex {w!r}")
        if u == v:
            problems.append(Violation("self_loop", (u,), "self-loops are not allowed"))
            continue
        key = (u, v) if u < v else (v, u)
        if key in edges:
            problems.append(Violation("duplicate_edge", key, "edge listed twice"))
            continue
        mu = _interval(item.get("mu"), D, key, f"edge {u}-{v}", problems)
        if mu is not None and key[0] in vertices and key[1] in vertices:
            edges[key] = mu

    g = IVFuzzyGraph(D, vertices, edges)
    problems.extend(validate(g))
    if problems:
        raise ValidationError(problems)
    return g


def read_graph(data) -> IVFuzzyGraph:
    """Parse document bytes (or text) into a validated graph."""
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise DocumentError(f"document is not UTF-8: {exc}") from None
    try:
        doc = json.loads(data, parse_float=Decimal)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from None
    return document_to_graph(doc)


def _dot_id(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(g: IVFuzzyGraph, report=None) -> str:
    """Undirected DOT text with membership labels.  A classification report,
    when given, is listed in a leading comment."""
    D = g.denominator

    def label(mu):
        return f"[{format_scalar(mu.lo, D)},{format_scalar(mu.hi, D)}]"

    lines = ["graph ivfg {"]
    if report is not None:
        flags = " ".join(f"{name}={str(getattr(report, name)).lower()}" for name in report.FLAGS)
        lines.append(f"  // classification: {flags}")
        for name in ("regular", "totally_regular"):
            pair = getattr(report, name)
            if pair is not None:
                lines.append(f"  // {name}=({format_scalar(pair.lo, D)}, {format_scalar(pair.hi, D)})")
    for v in g.sorted_vertices():
        lines.append(f"  {_dot_id(v)} [label={_dot_id(f'{v} {label(g.vertices[v])}')}];")
    for u, v in g.sorted_edges():
        lines.append(f"  {_dot_id(u)} -- {_dot_id(v)} [label={_dot_id(label(g.edges[(u, v)]))}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
