"""Properness and star-condition checking with explicit witnesses.

A coloring is a star k-edge coloring when it is proper and no path or cycle
with four edges carries exactly two colors (paths have 5 distinct vertices,
cycles 4).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import ImproperColoring, InvalidSpec, PartialColoring
from .graphs import HalinGraph, canon

NOT_PROPER = "not-proper"
BIPATH4 = "bipath4"
BICYCLE4 = "bicycle4"


@dataclass(frozen=True)
class Violation:
    kind: str
    witness: tuple[int, ...]  # 3 vertices for NOT_PROPER, 5 for BIPATH4, 4 for BICYCLE4


@dataclass
class EdgeColoring:
    """Total or partial map from edges (canonical pairs) to colors in 1..k."""

    k: int
    assignment: dict[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        self.assignment = {canon(*e): c for e, c in self.assignment.items()}
        bad = [c for c in self.assignment.values() if not 1 <= c <= self.k]
        if bad:
            raise InvalidSpec(f"colors {bad} outside 1..{self.k}")

    def get(self, u: int, v: int) -> int | None:
        return self.assignment.get(canon(u, v))

    def __getitem__(self, pair: tuple[int, int]) -> int:
        return self.assignment[canon(*pair)]

    def is_total_on(self, pairs) -> bool:
        return all(canon(*p) in self.assignment for p in pairs)

    def colors_used(self) -> set[int]:
        return set(self.assignment.values())

    def permuted(self, pi: dict[int, int]) -> "EdgeColoring":
        return EdgeColoring(self.k, {e: pi[c] for e, c in self.assignment.items()})

    def to_json(self) -> str:
        rows = sorted([u, v, c] for (u, v), c in self.assignment.items())
        return json.dumps({"k": self.k, "edges": rows},
                          sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "EdgeColoring":
        try:
            doc = json.loads(text)
            k = int(doc["k"])
            assignment = {canon(int(u), int(v)): int(c) for u, v, c in doc["edges"]}
        except (KeyError, TypeError, ValueError, json.JSONDecodeError) as exc:
            raise InvalidSpec(f"malformed coloring JSON: {exc}") from exc
        return cls(k, assignment)


def edge_pairs(g) -> list[tuple[int, int]]:
    """Accept a HalinGraph or any iterable of endpoint pairs."""
    if isinstance(g, HalinGraph):
        return list(g.edge_pairs)
    return [canon(int(u), int(v)) for u, v in g]


def adjacency_of(pairs) -> dict[int, list[int]]:
    adj: dict[int, list[int]] = {}
    for u, v in pairs:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    return {v: sorted(nbrs) for v, nbrs in adj.items()}


def four_edge_structures(pairs):
    """All 4-edge simple paths and 4-cycles, each once, canonically.

    Returns (kind, vertices) tuples: paths as 5-vertex sequences with
    first < last; cycles as 4-vertex sequences starting at the minimum
    vertex with the smaller second vertex.
    """
    adj = adjacency_of(pairs)
    out = []
    # paths: grow from each start vertex, keep the direction with v0 < v4
    for v0 in adj:
        for v1 in adj[v0]:
            for v2 in adj[v1]:
                if v2 == v0:
                    continue
                for v3 in adj[v2]:
                    if v3 in (v0, v1):
                        continue
                    for v4 in adj[v3]:
                        if v4 in (v1, v2):
                            continue
                        if v4 == v0:
                            # 4-cycle v0 v1 v2 v3
                            if v0 < min(v1, v2, v3) and v1 < v3:
                                out.append((BICYCLE4, (v0, v1, v2, v3)))
                        elif v0 < v4:
                            out.append((BIPATH4, (v0, v1, v2, v3, v4)))
    out.sort()
    return out


def _witness_edges(kind, verts):
    if kind == BICYCLE4:
        return [canon(verts[i], verts[(i + 1) % 4]) for i in range(4)]
    return [canon(verts[i], verts[i + 1]) for i in range(len(verts) - 1)]


def check_proper(g, c: EdgeColoring) -> list[Violation]:
    """Every pair of adjacent equally-colored edges, as witnesses."""
    pairs = edge_pairs(g)
    if not c.is_total_on(pairs):
        raise PartialColoring("coloring is not total on the graph's edges")
    at: dict[int, list[tuple[int, int]]] = {}
    for p in pairs:
        at.setdefault(p[0], []).append(p)
        at.setdefault(p[1], []).append(p)
    out = []
    for v, incident in sorted(at.items()):
        incident.sort()
        for i in range(len(incident)):
            for j in range(i + 1, len(incident)):
                e, f = incident[i], incident[j]
                if c[e] == c[f]:
                    a = e[0] if e[1] == v else e[1]
                    b = f[0] if f[1] == v else f[1]
                    a, b = min(a, b), max(a, b)
                    out.append(Violation(NOT_PROPER, (a, v, b)))
    return sorted(set(out), key=lambda w: (w.witness, w.kind))


def find_star_violations(g, c: EdgeColoring) -> list[Violation]:
    """All bicolored 4-edge paths/cycles; requires a proper total coloring."""
    improper = check_proper(g, c)
    if improper:
        raise ImproperColoring(improper)
    pairs = edge_pairs(g)
    out = []
    for kind, verts in four_edge_structures(pairs):
        colors = {c[e] for e in _witness_edges(kind, verts)}
        if len(colors) == 2:
            out.append(Violation(kind, verts))
    return out


def is_star_k(g, c: EdgeColoring, k: int) -> bool:
    """True iff c is a total proper star coloring using colors within 1..k."""
    pairs = edge_pairs(g)
    if not c.is_total_on(pairs):
        return False
    used = {c[p] for p in pairs}
    if used and (min(used) < 1 or max(used) > k):
        return False
    try:
        return not find_star_violations(g, c)
    except ImproperColoring:
        return False
