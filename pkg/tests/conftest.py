"""Shared helpers: random cubic graphs and a naive properness-safe colorer."""

from __future__ import annotations

import random

import networkx as nx
import pytest

from starhalin.graphs import canon


def random_cubic_pairs(n: int, seed: int) -> list[tuple[int, int]]:
    """Edge list of a random connected 3-regular graph on n vertices."""
    rng = seed
    while True:
        g = nx.random_regular_graph(3, n, seed=rng)
        if nx.is_connected(g):
            return sorted(canon(u, v) for u, v in g.edges())
        rng += 10_000


def greedy_proper_coloring(pairs, seed: int = 0) -> dict[tuple[int, int], int]:
    """A proper (not necessarily star) edge coloring with at most 6 colors."""
    rng = random.Random(seed)
    order = list(pairs)
    rng.shuffle(order)
    colors: dict[tuple[int, int], int] = {}
    for e in order:
        taken = {
            c for f, c in colors.items() if set(e) & set(f)
        }
        colors[e] = min(c for c in range(1, 8) if c not in taken)
    return colors


@pytest.fixture
def k4_pairs():
    return [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
