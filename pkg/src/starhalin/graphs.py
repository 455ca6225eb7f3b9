"""Cubic Halin graph model and deterministic generators.

A Halin graph is stored as its characteristic tree plus the cyclic order of
the tree leaves; the cycle edges are implied by consecutive leaves.  Vertex
ids are dense integers, spine/root first, then leaves in cycle order, so a
given spec always produces the same labeled graph.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property

from .errors import InvalidSpec

TREE = "tree"
CYCLE = "cycle"


def canon(u: int, v: int) -> tuple[int, int]:
    """Canonical (smaller id first) form of an edge's endpoint pair."""
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Edge:
    u: int
    v: int
    kind: str  # TREE or CYCLE

    def __post_init__(self):
        if self.u == self.v:
            raise ValueError("loop edge")
        if self.u > self.v:
            object.__setattr__(self, "u", self.v)
            object.__setattr__(self, "v", self.u)

    @property
    def pair(self) -> tuple[int, int]:
        return (self.u, self.v)


@dataclass(frozen=True)
class HalinGraph:
    """Immutable cubic Halin graph: tree edges plus a leaf cycle."""

    n: int
    tree_edges: frozenset[tuple[int, int]]
    leaf_order: tuple[int, ...]
    root: int = 0

    @cached_property
    def cycle_edges(self) -> frozenset[tuple[int, int]]:
        lo = self.leaf_order
        return frozenset(canon(lo[i], lo[(i + 1) % len(lo)]) for i in range(len(lo)))

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        out = [Edge(u, v, TREE) for u, v in self.tree_edges]
        out += [Edge(u, v, CYCLE) for u, v in self.cycle_edges]
        out.sort(key=lambda e: e.pair)
        return tuple(out)

    @cached_property
    def edge_pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple(e.pair for e in self.edges)

    @cached_property
    def adjacency(self) -> dict[int, tuple[int, ...]]:
        adj: dict[int, list[int]] = {v: [] for v in range(self.n)}
        for u, v in self.edge_pairs:
            adj[u].append(v)
            adj[v].append(u)
        return {v: tuple(sorted(nbrs)) for v, nbrs in adj.items()}

    @cached_property
    def leaves(self) -> frozenset[int]:
        return frozenset(self.leaf_order)

    def is_leaf(self, v: int) -> bool:
        return v in self.leaves

    def tree_neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(sorted(w for u, w in _incident(self.tree_edges, v)))

    def cycle_neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(sorted(w for u, w in _incident(self.cycle_edges, v)))

    def edge_kind(self, u: int, v: int) -> str:
        p = canon(u, v)
        if p in self.tree_edges:
            return TREE
        if p in self.cycle_edges:
            return CYCLE
        raise KeyError(f"no edge {p}")

    def validate(self) -> None:
        """Raise InvalidSpec unless all Halin-graph invariants hold."""
        n = self.n
        if sorted(set(v for e in self.edge_pairs for v in e)) != list(range(n)):
            raise InvalidSpec("vertex ids are not dense 0..n-1")
        if self.tree_edges & self.cycle_edges:
            raise InvalidSpec("edge is both tree and cycle")
        for v, nbrs in self.adjacency.items():
            if len(nbrs) != 3 or len(set(nbrs)) != 3:
                raise InvalidSpec(f"vertex {v} has degree {len(nbrs)}, want 3")
        # tree edges span all vertices without cycles
        if len(self.tree_edges) != n - 1:
            raise InvalidSpec("tree edge count is not n-1")
        seen = {0}
        stack = [0]
        tadj: dict[int, list[int]] = {v: [] for v in range(n)}
        for u, v in self.tree_edges:
            tadj[u].append(v)
            tadj[v].append(u)
        while stack:
            u = stack.pop()
            for w in tadj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != n:
            raise InvalidSpec("tree edges do not span the graph")
        # the cycle visits exactly the tree leaves, once each
        tree_leaves = {v for v in range(n) if len(tadj[v]) == 1}
        if set(self.leaf_order) != tree_leaves:
            raise InvalidSpec("cycle does not visit exactly the tree leaves")
        if len(self.leaf_order) != len(set(self.leaf_order)):
            raise InvalidSpec("leaf order repeats a vertex")
        for v in range(n):
            if len(tadj[v]) == 2:
                raise InvalidSpec(f"tree vertex {v} has tree degree 2")
        if not 0 <= self.root < n:
            raise InvalidSpec("root out of range")

    # -- serialization (byte-stable for a fixed graph) --

    def to_json(self) -> str:
        doc = {
            "n": self.n,
            "tree_edges": sorted(list(p) for p in self.tree_edges),
            "cycle_order": list(self.leaf_order),
        }
        return json.dumps(doc, sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "HalinGraph":
        try:
            doc = json.loads(text)
            n = int(doc["n"])
            tree = frozenset(canon(int(u), int(v)) for u, v in doc["tree_edges"])
            order = tuple(int(v) for v in doc["cycle_order"])
        except (KeyError, TypeError, ValueError, json.JSONDecodeError) as exc:
            raise InvalidSpec(f"malformed graph JSON: {exc}") from exc
        internal = set(range(n)) - set(order)
        root = min(internal) if internal else 0
        g = cls(n=n, tree_edges=tree, leaf_order=order, root=root)
        g.validate()
        return g


@dataclass(frozen=True)
class CompleteSpec:
    """Complete cubic Halin graph with ``l`` levels below the root."""

    l: int

    def __post_init__(self):
        if self.l < 1:
            raise InvalidSpec(f"level count must be >= 1, got {self.l}")


@dataclass(frozen=True)
class CaterpillarSpec:
    """Caterpillar-tree cubic Halin graph: spine length plus leaf sides.

    ``sides[i]`` ("L" or "R") places the single leaf of internal spine
    vertex v_{i+2}; end spine vertices always carry two leaves.
    """

    h: int
    sides: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if self.h < 1:
            raise InvalidSpec(f"spine length must be >= 1, got {self.h}")
        object.__setattr__(self, "sides", tuple(self.sides))
        want = max(self.h - 2, 0)
        if len(self.sides) != want:
            raise InvalidSpec(
                f"sides length {len(self.sides)} != {want} for h={self.h}"
            )
        if any(s not in ("L", "R") for s in self.sides):
            raise InvalidSpec(f"sides must be 'L'/'R', got {self.sides}")


def mirror(spec: CaterpillarSpec) -> CaterpillarSpec:
    """Swap every leaf to the opposite side of the spine."""
    flip = {"L": "R", "R": "L"}
    return CaterpillarSpec(spec.h, tuple(flip[s] for s in spec.sides))


def build_complete(spec: CompleteSpec) -> HalinGraph:
    """Complete cubic Halin graph: root with 3 children, then full binary.

    Vertices are numbered level by level, left to right, so the leaf cycle
    is simply the last level in ascending id order.
    """
    l = spec.l
    tree: set[tuple[int, int]] = set()
    level = [0]
    next_id = 1
    for depth in range(l):
        fanout = 3 if depth == 0 else 2
        nxt = []
        for p in level:
            for _ in range(fanout):
                tree.add(canon(p, next_id))
                nxt.append(next_id)
                next_id += 1
        level = nxt
    g = HalinGraph(n=next_id, tree_edges=frozenset(tree), leaf_order=tuple(level))
    g.validate()
    return g


def build_caterpillar(spec: CaterpillarSpec) -> HalinGraph:
    """Caterpillar cubic Halin graph under the fixed embedding convention.

    Cycle order: first leaf of v_1, left-side leaves by ascending spine
    index, both leaves of v_h, right-side leaves by descending index, then
    the other leaf of v_1.  Spine vertices take ids 0..h-1; leaves continue
    in cycle order.
    """
    h = spec.h
    if h == 1:
        g = HalinGraph(
            n=4,
            tree_edges=frozenset({(0, 1), (0, 2), (0, 3)}),
            leaf_order=(1, 2, 3),
        )
        g.validate()
        return g
    # leaf owners in cycle order (spine index, 1-based)
    owners = [1]
    owners += [i for i in range(2, h) if spec.sides[i - 2] == "L"]
    owners += [h, h]
    owners += [i for i in range(h - 1, 1, -1) if spec.sides[i - 2] == "R"]
    owners += [1]
    tree = {canon(i, i + 1) for i in range(h - 1)}
    order = []
    for pos, owner in enumerate(owners):
        leaf = h + pos
        tree.add(canon(owner - 1, leaf))
        order.append(leaf)
    g = HalinGraph(n=2 * h + 2, tree_edges=frozenset(tree), leaf_order=tuple(order))
    g.validate()
    return g


def build_necklace(h: int) -> HalinGraph:
    """Necklace graph: the caterpillar with all leaves on one side."""
    if h < 1:
        raise InvalidSpec(f"necklace index must be >= 1, got {h}")
    return build_caterpillar(CaterpillarSpec(h, ("L",) * max(h - 2, 0)))


def _incident(pairs, v: int):
    for u, w in pairs:
        if u == v:
            yield (u, w)
        elif w == v:
            yield (w, u)
