"""Verifier unit tests plus equivalence against independent oracles."""

from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import greedy_proper_coloring, random_cubic_pairs
from starhalin.errors import ImproperColoring, PartialColoring
from starhalin.verify import (
    BICYCLE4,
    BIPATH4,
    NOT_PROPER,
    EdgeColoring,
    check_proper,
    find_star_violations,
    four_edge_structures,
    is_star_k,
)


def naive_structures(pairs):
    """Independent enumeration of 4-edge paths and 4-cycles via networkx."""
    g = nx.Graph(pairs)
    out = set()
    for s in g:
        for t in g:
            if s < t:
                for p in nx.all_simple_paths(g, s, t, cutoff=4):
                    if len(p) == 5:
                        out.add((BIPATH4, tuple(p)))
    for cyc in nx.simple_cycles(g, length_bound=4):
        if len(cyc) == 4:
            v0 = min(cyc)
            i = cyc.index(v0)
            ring = cyc[i:] + cyc[:i]
            if ring[1] > ring[3]:
                ring = [ring[0]] + ring[:0:-1]
            out.add((BICYCLE4, tuple(ring)))
    return out


def test_all_one_k4_has_twelve_properness_conflicts(k4_pairs):
    c = EdgeColoring(1, {e: 1 for e in k4_pairs})
    bad = check_proper(k4_pairs, c)
    assert len(bad) == 12
    assert all(v.kind == NOT_PROPER for v in bad)


def test_alternating_path_is_one_bipath4():
    pairs = [(0, 1), (1, 2), (2, 3), (3, 4)]
    c = EdgeColoring(2, dict(zip(pairs, [1, 2, 1, 2])))
    bad = find_star_violations(pairs, c)
    assert [v.kind for v in bad] == [BIPATH4]
    assert bad[0].witness == (0, 1, 2, 3, 4)


def test_alternating_4_cycle_is_one_bicycle4():
    pairs = [(0, 1), (1, 2), (2, 3), (0, 3)]
    c = EdgeColoring(2, dict(zip(pairs, [1, 2, 1, 2])))
    bad = find_star_violations(pairs, c)
    assert [v.kind for v in bad] == [BICYCLE4]
    assert bad[0].witness == (0, 1, 2, 3)


def test_c5_with_three_plus_colors_is_clean():
    pairs = [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]
    c = EdgeColoring(4, dict(zip(pairs, [1, 2, 1, 3, 4])))
    assert find_star_violations(pairs, c) == []
    assert is_star_k(pairs, c, 4)


def test_partial_and_improper_inputs_raise():
    pairs = [(0, 1), (1, 2), (2, 3)]
    with pytest.raises(PartialColoring):
        check_proper(pairs, EdgeColoring(2, {(0, 1): 1}))
    with pytest.raises(ImproperColoring):
        find_star_violations(
            pairs, EdgeColoring(2, dict(zip(pairs, [1, 1, 2])))
        )


@pytest.mark.parametrize("seed", range(50))
def test_structure_enumeration_matches_networkx(seed):
    n = [4, 6, 8, 10, 12][seed % 5]
    pairs = random_cubic_pairs(n, seed)
    assert set(four_edge_structures(pairs)) == naive_structures(pairs)


@pytest.mark.parametrize("seed", range(20))
def test_violations_match_naive_two_color_filter(seed):
    pairs = random_cubic_pairs([6, 8, 10, 12][seed % 4], 1000 + seed)
    c = EdgeColoring(7, greedy_proper_coloring(pairs, seed))

    def edge_colors(kind, verts):
        ring = list(verts) + ([verts[0]] if kind == BICYCLE4 else [])
        return {c[(ring[i], ring[i + 1])] for i in range(len(ring) - 1)}

    expected = sorted(
        (kind, verts)
        for kind, verts in naive_structures(pairs)
        if len(edge_colors(kind, verts)) == 2
    )
    got = sorted((v.kind, v.witness) for v in find_star_violations(pairs, c))
    assert got == expected


@given(st.integers(0, 10**6), st.permutations([1, 2, 3, 4, 5, 6, 7]))
@settings(max_examples=60, deadline=None)
def test_color_permutation_invariance(seed, perm):
    pairs = random_cubic_pairs(8, seed % 100)
    c = EdgeColoring(7, greedy_proper_coloring(pairs, seed))
    pi = dict(zip(range(1, 8), perm))
    before = find_star_violations(pairs, c)
    after = find_star_violations(pairs, c.permuted(pi))
    assert before == after
    assert is_star_k(pairs, c, 7) == is_star_k(pairs, c.permuted(pi), 7)


def test_star_k_monotone_in_k():
    pairs = [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]
    c = EdgeColoring(6, dict(zip(pairs, [1, 2, 1, 3, 4])))
    assert all(is_star_k(pairs, c, k) for k in (4, 5, 6))
    assert not is_star_k(pairs, c, 3)  # color 4 is out of range
