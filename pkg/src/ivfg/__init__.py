"""Interval-valued fuzzy graphs with exact rational memberships."""

from __future__ import annotations

from .classify import (
    ClassificationReport,
    classify,
    is_complete,
    is_connected,
    is_highly_irregular,
    is_irregular,
    is_neighbourly_irregular,
    is_neighbourly_total_irregular,
    is_strong,
    is_totally_irregular,
    regular_constants,
    totally_regular_constants,
)
from .core import (
    DegreePair,
    EmptyGraphError,
    IVFGError,
    IVFuzzyGraph,
    PrecisionError,
    UnitInterval,
    UnknownVertexError,
    ValidationError,
    Violation,
    ivfs_intersection,
    ivfs_union,
    new_graph,
    validate,
)
from .generate import EnumSpec, Grid, count_graphs, enumerate_graphs, make_regular_cycle, random_graph
from .io import DocumentError, export_dot, read_graph, write_graph
from .metrics import degree, degrees, max_degree, min_degree, order, size, total_degree, total_degrees
from .transform import NotStrongError, complement_raw, complement_strong, underlying_crisp

__version__ = "0.1.0"

__all__ = [
    "ClassificationReport",
    "DegreePair",
    "DocumentError",
    "EmptyGraphError",
    "EnumSpec",
    "Grid",
    "IVFGError",
    "IVFuzzyGraph",
    "NotStrongError",
    "PrecisionError",
    "UnitInterval",
    "UnknownVertexError",
    "ValidationError",
    "Violation",
    "classify",
    "complement_raw",
    "complement_strong",
    "count_graphs",
    "degree",
    "degrees",
    "enumerate_graphs",
    "export_dot",
    "is_complete",
    "is_connected",
    "is_highly_irregular",
    "is_irregular",
    "is_neighbourly_irregular",
    "is_neighbourly_total_irregular",
    "is_strong",
    "is_totally_irregular",
    "ivfs_intersection",
    "ivfs_union",
    "make_regular_cycle",
    "max_degree",
    "min_degree",
    "new_graph",
    "order",
    "random_graph",
    "read_graph",
    "regular_constants",
    "size",
    "total_degree",
    "total_degrees",
    "totally_regular_constants",
    "underlying_crisp",
    "validate",
    "write_graph",
]
