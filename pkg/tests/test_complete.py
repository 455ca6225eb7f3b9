"""Inductive coloring of complete cubic Halin graphs."""

from __future__ import annotations

import pytest

from starhalin.complete import (
    ExpansionState,
    base_complete,
    color_complete,
    expand_at,
)
from starhalin.errors import InvalidSpec
from starhalin.graphs import CompleteSpec, build_complete
from starhalin.verify import is_star_k


@pytest.mark.parametrize("l", [1, 2, 3])
def test_base_colorings_are_star_5(l):
    g = build_complete(CompleteSpec(l))
    assert is_star_k(g, base_complete(l), 5)


def test_base_rejects_higher_levels():
    with pytest.raises(InvalidSpec):
        base_complete(4)


def test_expand_at_grows_and_preserves_old_colors():
    seed = build_complete(CompleteSpec(2))
    state = ExpansionState(seed, base_complete(2), seed.leaf_order)
    v = state.pending[0]
    dropped = {
        tuple(sorted((v, w))) for w in state.graph.cycle_neighbors(v)
    }
    nxt = expand_at(state, v)
    assert nxt.graph.n == state.graph.n + 14
    assert len(nxt.graph.edges) == len(state.graph.edges) + 21
    nxt.graph.validate()
    assert is_star_k(nxt.graph, nxt.coloring, 5)
    for e, c in state.coloring.assignment.items():
        if e not in dropped:
            assert nxt.coloring.assignment[e] == c
    assert v not in nxt.pending


def test_expand_at_rejects_internal_or_finished_vertices():
    seed = build_complete(CompleteSpec(2))
    state = ExpansionState(seed, base_complete(2), seed.leaf_order)
    with pytest.raises(InvalidSpec):
        expand_at(state, seed.root)
    done = ExpansionState(seed, base_complete(2), ())
    with pytest.raises(InvalidSpec):
        expand_at(done, seed.leaf_order[0])


@pytest.mark.parametrize("l", range(1, 8))
def test_color_complete_through_level_7(l):
    g = build_complete(CompleteSpec(l))
    c = color_complete(l)
    assert is_star_k(g, c, 5)
    assert set(c.assignment) == set(g.edge_pairs)
