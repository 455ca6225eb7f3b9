"""Inductive caterpillar coloring: reduction, dispatch, and full sweeps."""

from __future__ import annotations

from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from starhalin.caterpillar import (
    NeedsSixColors,
    apply_plan,
    classify,
    color_caterpillar,
    normalize,
    plan_extension,
    reduce,
    spine_of,
)
from starhalin.errors import ReductionUnavailable
from starhalin.graphs import (
    CaterpillarSpec,
    build_caterpillar,
    build_necklace,
    canon,
)
from starhalin.solver import SearchConfig, assert_lower_bound_5, decide
from starhalin.verify import is_star_k


def all_specs(h):
    return [
        CaterpillarSpec(h, sides)
        for sides in product("LR", repeat=max(h - 2, 0))
    ]


def spec_strategy(lo, hi):
    return st.integers(lo, hi).flatmap(
        lambda h: st.tuples(*[st.sampled_from("LR")] * (h - 2))
        .map(lambda s: CaterpillarSpec(h, s))
    )


class TestReduce:
    @given(spec_strategy(6, 10))
    @settings(max_examples=30, deadline=None)
    def test_reduction_shrinks_by_four_vertices(self, spec):
        g = build_caterpillar(spec)
        gp, frame = reduce(g)
        assert g.n == 2 * spec.h + 2
        assert gp.n == 2 * spec.h - 2
        assert len(spine_of(gp)) == spec.h - 2
        gp.validate()
        # the demoted spine vertex is now a cycle vertex of the smaller graph
        assert frame.old_to_new[frame.v] in gp.leaves

    def test_reduction_needs_long_spine(self):
        with pytest.raises(ReductionUnavailable):
            reduce(build_necklace(5))


class TestStep:
    def _frame(self, spec):
        g = build_caterpillar(spec)
        gp, frame = reduce(g)
        res = decide(gp, SearchConfig(k=5))
        return g, gp, frame, res.coloring

    @given(spec_strategy(6, 9))
    @settings(max_examples=25, deadline=None)
    def test_normalize_pins_the_three_local_colors(self, spec):
        _, gp, frame, c = self._frame(spec)
        cn, pi = normalize(c, gp, frame)
        o2n = frame.old_to_new
        v = o2n[frame.v]
        assert cn[(v, o2n[frame.w])] == 1
        assert cn[(v, o2n[frame.x1])] == 2
        assert cn[(v, o2n[frame.y2])] == 3
        assert sorted(pi) == sorted(pi.values()) == [1, 2, 3, 4, 5]

    @given(spec_strategy(6, 9))
    @settings(max_examples=25, deadline=None)
    def test_step_extends_without_touching_distant_edges(self, spec):
        g, gp, frame, c = self._frame(spec)
        cn, pi = normalize(c, gp, frame)
        ctx = classify(gp, cn, frame)
        assert ctx.case_id in (1, 2)
        plan = plan_extension(ctx)
        assert set(plan.colors) == {
            "uv", "uu1", "uu2", "u1u2", "x1u1", "u2y1", "vy1", "y1y2"
        }
        assert set(plan.recolor) <= {"vw", "wx1", "x1x2"}
        full = apply_plan(g, cn, frame, plan, pi)
        assert is_star_k(g, full, 5)
        # anything outside the restored and recolorable edges keeps its color
        touched = set(frame.restored_edges().values())
        touched |= set(frame.recolorable_edges().values())
        o2n = frame.old_to_new
        for (a, b), col in c.assignment.items():
            old = canon(frame.new_to_old[a], frame.new_to_old[b])
            if old not in touched and old != canon(frame.v, frame.x1) \
                    and old != canon(frame.v, frame.y2):
                assert full[old] == col


class TestSweeps:
    @pytest.mark.parametrize("h", range(1, 10))
    def test_every_side_vector_up_to_h9(self, h):
        if h == 2:
            return
        for spec in all_specs(h):
            g = build_caterpillar(spec)
            assert is_star_k(g, color_caterpillar(spec), 5), spec

    @pytest.mark.parametrize("h", range(3, 13))
    def test_necklaces(self, h):
        spec = CaterpillarSpec(h, ("L",) * max(h - 2, 0))
        assert is_star_k(build_necklace(h), color_caterpillar(spec), 5)

    def test_h2_needs_six_colors(self):
        out = color_caterpillar(CaterpillarSpec(2, ()))
        assert isinstance(out, NeedsSixColors)
        g = build_caterpillar(CaterpillarSpec(2, ()))
        assert is_star_k(g, out.witness, 6)
        assert assert_lower_bound_5(g)
        assert decide(g, SearchConfig(k=5)).outcome == "unsat"

    @pytest.mark.parametrize("h", [1, 3, 4, 5])
    def test_small_bases_match_exact_solver_bound(self, h):
        for spec in all_specs(h):
            g = build_caterpillar(spec)
            c = color_caterpillar(spec)
            assert is_star_k(g, c, 5)
            assert assert_lower_bound_5(g)
