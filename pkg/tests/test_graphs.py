"""Builders, validation, and JSON round-trips."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from starhalin.caterpillar import _builder_isomorphism
from starhalin.errors import InvalidSpec
from starhalin.graphs import (
    CaterpillarSpec,
    CompleteSpec,
    HalinGraph,
    build_caterpillar,
    build_complete,
    build_necklace,
    canon,
    mirror,
)


def caterpillar_specs(max_h=8):
    return st.integers(1, max_h).flatmap(
        lambda h: st.tuples(
            st.just(h),
            st.tuples(*[st.sampled_from("LR")] * max(h - 2, 0)),
        )
    ).map(lambda t: CaterpillarSpec(*t))


class TestComplete:
    @pytest.mark.parametrize(
        "l,n,m,leaves",
        [(1, 4, 6, 3), (2, 10, 15, 6), (3, 22, 33, 12), (4, 46, 69, 24)],
    )
    def test_counts(self, l, n, m, leaves):
        g = build_complete(CompleteSpec(l))
        assert g.n == n == 1 + 3 * (2**l - 1)
        assert len(g.edges) == m
        assert len(g.leaves) == leaves
        g.validate()

    def test_level_1_is_k4(self):
        g = build_complete(CompleteSpec(1))
        assert set(g.edge_pairs) == {
            (0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)
        }

    def test_rejects_level_0(self):
        with pytest.raises(InvalidSpec):
            CompleteSpec(0)

    @given(st.integers(1, 6))
    @settings(max_examples=6, deadline=None)
    def test_valid_cubic_halin(self, l):
        build_complete(CompleteSpec(l)).validate()


class TestCaterpillar:
    @given(caterpillar_specs())
    @settings(max_examples=60, deadline=None)
    def test_counts_and_validity(self, spec):
        g = build_caterpillar(spec)
        assert g.n == 2 * spec.h + 2
        assert len(g.edges) == 3 * spec.h + 3
        assert len(g.leaves) == spec.h + 2
        g.validate()

    def test_h1_is_k4(self):
        g = build_caterpillar(CaterpillarSpec(1, ()))
        assert g.n == 4 and len(g.edges) == 6

    def test_cycle_order_convention(self):
        # spine 0..4; leaves walk one side of the spine out and the other back
        g = build_caterpillar(CaterpillarSpec(5, ("L", "R", "L")))
        assert g.leaf_order == (5, 6, 7, 8, 9, 10, 11)
        owners = [g.tree_neighbors(v)[0] for v in g.leaf_order]
        assert owners == [0, 1, 3, 4, 4, 2, 0]

    def test_necklace_is_one_sided(self):
        assert build_necklace(4) == build_caterpillar(
            CaterpillarSpec(4, ("L", "L"))
        )

    def test_rejects_bad_sides(self):
        with pytest.raises(InvalidSpec):
            CaterpillarSpec(5, ("L", "R"))
        with pytest.raises(InvalidSpec):
            CaterpillarSpec(4, ("L", "X"))
        with pytest.raises(InvalidSpec):
            CaterpillarSpec(0, ())

    @given(caterpillar_specs(max_h=7))
    @settings(max_examples=40, deadline=None)
    def test_mirror_involution_and_isomorphism(self, spec):
        assert mirror(mirror(spec)) == spec
        g, gm = build_caterpillar(spec), build_caterpillar(mirror(spec))
        m = _builder_isomorphism(gm, g)
        assert m is not None
        assert {canon(m[a], m[b]) for a, b in gm.tree_edges} == set(g.tree_edges)
        assert {canon(m[a], m[b]) for a, b in gm.cycle_edges} == set(g.cycle_edges)


class TestJson:
    @given(caterpillar_specs(max_h=6))
    @settings(max_examples=30, deadline=None)
    def test_round_trip_is_byte_stable(self, spec):
        g = build_caterpillar(spec)
        text = g.to_json()
        g2 = HalinGraph.from_json(text)
        assert g2.to_json() == text
        assert g2.edges == g.edges

    def test_malformed_json_rejected(self):
        with pytest.raises(InvalidSpec):
            HalinGraph.from_json("{")
        with pytest.raises(InvalidSpec):
            HalinGraph.from_json('{"n": 4}')

    def test_validate_rejects_non_cubic(self):
        g = build_caterpillar(CaterpillarSpec(3, ("L",)))
        broken = HalinGraph(
            n=g.n,
            tree_edges=frozenset(list(g.tree_edges)[:-1]),
            leaf_order=g.leaf_order,
            root=g.root,
        )
        with pytest.raises(InvalidSpec):
            broken.validate()
