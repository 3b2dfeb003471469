from __future__ import annotations

from decimal import Decimal
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ivfg import (
    DegreePair,
    IVFuzzyGraph,
    PrecisionError,
    UnitInterval,
    UnknownVertexError,
    ValidationError,
    ivfs_intersection,
    ivfs_union,
    new_graph,
    validate,
)
from ivfg.core import edge_key, format_scalar, to_numerator

from strategies import graphs


class TestNumerators:
    @pytest.mark.parametrize(
        "value, D, expected",
        [("0.35", 100, 35), (0.1, 10, 1), (Decimal("0.5"), 2, 1), (Fraction(1, 3), 3, 1), (1, 100, 100), ("0", 7, 0)],
    )
    def test_exact_conversion(self, value, D, expected):
        assert to_numerator(value, D) == expected

    @pytest.mark.parametrize("value, D", [("0.35", 10), (0.001, 100), (Fraction(1, 3), 100), ("abc", 10)])
    def test_unrepresentable_is_rejected(self, value, D):
        with pytest.raises(PrecisionError):
            to_numerator(value, D)

    def test_float_uses_shortest_repr(self):
        # 0.1 + 0.2 is 0.30000000000000004 in binary, which tenths cannot hold
        with pytest.raises(PrecisionError):
            to_numerator(0.1 + 0.2, 10)

    def test_bool_is_not_a_value(self):
        with pytest.raises(TypeError):
            to_numerator(True, 10)

    @pytest.mark.parametrize(
        "num, D, text", [(2, 10, "0.2"), (0, 10, "0.0"), (10, 10, "1.0"), (35, 100, "0.35"), (12, 10, "1.2"), (1, 3, "1/3")]
    )
    def test_format_scalar(self, num, D, text):
        assert format_scalar(num, D) == text


class TestIntervals:
    def test_bounds_ordered(self):
        with pytest.raises(ValidationError):
            UnitInterval(4, 0)

    def test_negative_rejected(self):
        with pytest.raises(ValidationError):
            UnitInterval(-1, 2)

    def test_requires_ints(self):
        with pytest.raises(TypeError):
            UnitInterval(0.1, 0.2)

    def test_lattice(self):
        a, b = UnitInterval(1, 5), UnitInterval(2, 3)
        assert a.meet(b) == UnitInterval(1, 3)
        assert a.join(b) == UnitInterval(2, 5)
        assert UnitInterval(1, 3).fits_under(a)
        assert not UnitInterval(2, 3).fits_under(a)

    def test_zero_and_positive(self):
        assert UnitInterval(0, 0).is_zero
        assert UnitInterval(1, 2).is_positive
        assert not UnitInterval(0, 2).is_positive

    def test_degree_pair_arithmetic(self):
        p = DegreePair(1, 2) + UnitInterval(3, 4)
        assert p == DegreePair(4, 6)
        assert p * 2 == DegreePair(8, 12)


class TestIVFS:
    def test_union_and_intersection(self):
        a = {"x": UnitInterval(1, 3), "y": UnitInterval(0, 5)}
        b = {"x": UnitInterval(2, 2), "y": UnitInterval(1, 4)}
        assert ivfs_union(a, b) == {"x": UnitInterval(2, 3), "y": UnitInterval(1, 5)}
        assert ivfs_intersection(a, b) == {"x": UnitInterval(1, 2), "y": UnitInterval(0, 4)}

    def test_mismatched_denominators(self):
        a = {"x": UnitInterval(1, 3)}
        with pytest.raises(ValueError):
            ivfs_union(a, a, denominators=(10, 100))

    def test_mismatched_support(self):
        with pytest.raises(ValueError):
            ivfs_intersection({"x": UnitInterval(0, 0)}, {"y": UnitInterval(0, 0)})

    @given(st.integers(0, 10), st.integers(0, 10), st.integers(0, 10), st.integers(0, 10))
    def test_absorption(self, a, b, c, d):
        x = {"k": UnitInterval(min(a, b), max(a, b))}
        y = {"k": UnitInterval(min(c, d), max(c, d))}
        assert ivfs_union(x, ivfs_intersection(x, y)) == x
        assert ivfs_intersection(x, ivfs_union(x, y)) == x


class TestGraph:
    def test_builder_is_immutable(self):
        g = new_graph(10)
        h = g.add_vertex("a", ("0.4", "0.5"))
        assert len(g) == 0 and len(h) == 1

    def test_edge_key_is_unordered(self):
        g = new_graph(10).add_vertex("a", (1, 1)).add_vertex("b", (1, 1)).add_edge("b", "a", ("0.3", "0.4"))
        assert g.edge("a", "b") == g.edge("b", "a") == UnitInterval(3, 4)
        assert g.sorted_edges() == [("a", "b")]

    def test_edge_over_lower_bound_names_tight_endpoint(self):
        g = new_graph(10).add_vertex("a", ("0.2", "0.9")).add_vertex("b", ("0.5", "0.6"))
        with pytest.raises(ValidationError) as info:
            g.add_edge("a", "b", ("0.3", "0.4"))
        (v,) = info.value.violations
        assert v.kind == "lower_bound" and v.subject == ("a", "b") and "of a" in v.detail

    def test_edge_over_upper_bound(self):
        g = new_graph(10).add_vertex("a", ("0.2", "0.9")).add_vertex("b", ("0.5", "0.6"))
        with pytest.raises(ValidationError) as info:
            g.add_edge("a", "b", ("0.1", "0.7"))
        assert [v.kind for v in info.value.violations] == ["upper_bound"]

    def test_both_bounds_reported(self):
        g = new_graph(10).add_vertex("a", ("0.2", "0.3")).add_vertex("b", ("0.5", "0.6"))
        with pytest.raises(ValidationError) as info:
            g.add_edge("a", "b", ("0.3", "0.4"))
        assert {v.kind for v in info.value.violations} == {"lower_bound", "upper_bound"}

    def test_self_loop_rejected(self):
        g = new_graph(10).add_vertex("a", (1, 1))
        with pytest.raises(ValidationError):
            g.add_edge("a", "a", (0, 0))

    def test_missing_endpoint(self):
        g = new_graph(10).add_vertex("a", (1, 1))
        with pytest.raises(ValidationError) as info:
            g.add_edge("a", "q", (0, 0))
        assert info.value.violations[0].subject == ("q",)

    def test_duplicates(self):
        g = new_graph(10).add_vertex("a", (1, 1)).add_vertex("b", (1, 1)).add_edge("a", "b", (0, 0))
        with pytest.raises(ValidationError):
            g.add_vertex("a", (0, 0))
        with pytest.raises(ValidationError):
            g.add_edge("b", "a", (0, 0))

    def test_vertex_above_one(self):
        with pytest.raises(ValidationError):
            new_graph(10).add_vertex("a", (0, "1.1"))

    def test_precision_rejected_not_rounded(self):
        with pytest.raises(PrecisionError):
            new_graph(10).add_vertex("a", ("0.25", "0.5"))

    def test_non_string_id(self):
        with pytest.raises(TypeError):
            new_graph(10).add_vertex(1, (0, 0))

    def test_unknown_vertex(self):
        with pytest.raises(UnknownVertexError):
            new_graph(10).vertex("q")

    def test_from_parts_validates(self):
        with pytest.raises(ValidationError):
            IVFuzzyGraph.from_parts(10, {"a": UnitInterval(1, 2), "b": UnitInterval(1, 2)}, {("b", "a"): UnitInterval(2, 2)})

    def test_neighbours_sorted(self, four_vertex_highly_irregular):
        assert four_vertex_highly_irregular.neighbours("v2") == ("v1", "v3", "v4")

    def test_equality_and_hash(self):
        a = new_graph(10).add_vertex("a", (1, 1)).add_vertex("b", (1, 1))
        b = new_graph(10).add_vertex("b", (1, 1)).add_vertex("a", (1, 1))
        assert a == b and hash(a) == hash(b)
        assert a != new_graph(100).add_vertex("a", (1, 1)).add_vertex("b", (1, 1))

    def test_edge_key(self):
        assert edge_key("b", "a") == ("a", "b")


@given(graphs())
def test_generated_graphs_validate(g):
    assert validate(g) == []


@given(graphs(), st.randoms(use_true_random=False))
def test_construction_order_independent(g, rnd):
    vs = list(g.vertices.items())
    es = list(g.edges.items())
    rnd.shuffle(vs)
    rnd.shuffle(es)
    h = new_graph(g.denominator)
    for vid, mu in vs:
        h = h.add_vertex(vid, mu)
    for (u, v), mu in es:
        h = h.add_edge(*((v, u) if rnd.random() < 0.5 else (u, v)), mu)
    assert h == g
