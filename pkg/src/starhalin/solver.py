"""Exhaustive decision procedure for star k-edge colorability.

Ground-truth oracle: branch on edges in BFS order from the root so every new
edge touches colored ones, prune incrementally on properness and bicolored
4-edge structures containing the new edge, and (when nothing is pre-colored)
break color symmetry by fixing the three edges at one vertex to 1,2,3 plus a
first-occurrence ordering on the remaining colors.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .errors import InvalidSpec, NodeLimitExceeded
from .graphs import HalinGraph, canon
from .verify import EdgeColoring, adjacency_of, edge_pairs, four_edge_structures

SAT = "sat"
UNSAT = "unsat"
LIMIT = "limit"

# beyond this many free edges the CLI demands an explicit node limit
UNLIMITED_EDGE_BUDGET = 40


@dataclass
class SearchConfig:
    k: int
    forced: dict[tuple[int, int], int] = field(default_factory=dict)
    free_edges: list[tuple[int, int]] | None = None  # None = everything unforced
    node_limit: int | None = None
    symmetry_break: bool = True

    def __post_init__(self):
        self.forced = {canon(*e): c for e, c in self.forced.items()}
        if self.free_edges is not None:
            self.free_edges = [canon(*e) for e in self.free_edges]
            overlap = set(self.free_edges) & set(self.forced)
            if overlap:
                raise InvalidSpec(f"edges both forced and free: {sorted(overlap)}")


@dataclass
class SolveResult:
    outcome: str  # SAT | UNSAT | LIMIT
    coloring: EdgeColoring | None
    nodes_explored: int


def _bfs_edge_order(pairs, adj, start: int) -> list[tuple[int, int]]:
    order, seen_e, seen_v = [], set(), {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in adj.get(v, ()):
            e = canon(v, w)
            if e not in seen_e:
                seen_e.add(e)
                order.append(e)
            if w not in seen_v:
                seen_v.add(w)
                queue.append(w)
    for e in pairs:  # disconnected leftovers, if any
        if e not in seen_e:
            seen_e.add(e)
            order.append(e)
    return order


def decide(g, cfg: SearchConfig) -> SolveResult:
    """Decide star k-edge colorability of the free edges given the forced ones."""
    pairs = edge_pairs(g)
    pair_set = set(pairs)
    for e in cfg.forced:
        if e not in pair_set:
            raise InvalidSpec(f"forced edge {e} not in graph")
    adj = adjacency_of(pairs)
    start = g.root if isinstance(g, HalinGraph) else min(adj)
    ordered = _bfs_edge_order(pairs, adj, start)
    index = {e: i for i, e in enumerate(ordered)}
    m = len(ordered)
    k = cfg.k

    adj_edges: list[list[int]] = [[] for _ in range(m)]
    at_vertex: dict[int, list[int]] = {}
    for e, i in index.items():
        at_vertex.setdefault(e[0], []).append(i)
        at_vertex.setdefault(e[1], []).append(i)
    for ids in at_vertex.values():
        for i in ids:
            for j in ids:
                if j != i:
                    adj_edges[i].append(j)
    adj_edges = [sorted(set(a)) for a in adj_edges]

    structs: list[tuple[int, int, int, int]] = []
    for kind, verts in four_edge_structures(pairs):
        if kind == "bicycle4":
            eids = [index[canon(verts[i], verts[(i + 1) % 4])] for i in range(4)]
        else:
            eids = [index[canon(verts[i], verts[i + 1])] for i in range(4)]
        structs.append(tuple(eids))
    structs_of: list[list[tuple[int, int, int]]] = [[] for _ in range(m)]
    for s in structs:
        for i in s:
            structs_of[i].append(tuple(j for j in s if j != i))

    color = [0] * m
    for e, c in cfg.forced.items():
        if not 1 <= c <= k:
            raise InvalidSpec(f"forced color {c} outside 1..{k}")
        color[index[e]] = c

    if cfg.free_edges is None:
        free = [i for i in range(m) if color[i] == 0]
    else:
        free = sorted(index[e] for e in cfg.free_edges)  # BFS-order positions

    use_symmetry = cfg.symmetry_break and not cfg.forced and cfg.free_edges is None
    base_max_used = 0
    if use_symmetry:
        pivot = None
        for v in sorted(at_vertex):
            if len(at_vertex[v]) == 3:
                pivot = v
                break
        if pivot is not None:
            if k < 3:
                return SolveResult(UNSAT, None, 0)
            for c, i in enumerate(sorted(at_vertex[pivot]), start=1):
                color[i] = c
            free = [i for i in free if color[i] == 0]
            base_max_used = 3
        else:
            use_symmetry = False

    def ok(i: int, c: int) -> bool:
        for j in adj_edges[i]:
            if color[j] == c:
                return False
        for a, b, d in structs_of[i]:
            ca, cb, cd = color[a], color[b], color[d]
            if ca and cb and cd and len({c, ca, cb, cd}) == 2:
                return False
        return True

    nodes = 0
    limit = cfg.node_limit

    def dfs(pos: int, max_used: int) -> str:
        nonlocal nodes
        if pos == len(free):
            return SAT
        i = free[pos]
        top = min(k, max_used + 1) if use_symmetry else k
        for c in range(1, top + 1):
            nodes += 1
            if limit is not None and nodes > limit:
                return LIMIT
            if ok(i, c):
                color[i] = c
                res = dfs(pos + 1, max(max_used, c))
                if res != UNSAT:
                    return res
                color[i] = 0
        return UNSAT

    # the pre-fixed pivot colors must themselves be conflict-free
    if use_symmetry and base_max_used:
        for i in range(m):
            if color[i]:
                c = color[i]
                color[i] = 0
                valid = ok(i, c)
                color[i] = c
                if not valid:
                    return SolveResult(UNSAT, None, 0)

    res = dfs(0, base_max_used)
    if res == LIMIT:
        return SolveResult(LIMIT, None, nodes)
    if res == UNSAT:
        return SolveResult(UNSAT, None, nodes)
    assignment = {ordered[i]: color[i] for i in range(m)}
    return SolveResult(SAT, EdgeColoring(k, assignment), nodes)


def chromatic_index(g, kmax: int, node_limit: int | None = None):
    """Smallest k <= kmax with a star k-edge coloring, plus a witness.

    Returns (k, coloring) or None when every k <= kmax is unsatisfiable.
    Raises NodeLimitExceeded if any decision hits the node limit.
    """
    if kmax < 1:
        raise InvalidSpec(f"kmax must be >= 1, got {kmax}")
    for k in range(1, kmax + 1):
        res = decide(g, SearchConfig(k=k, node_limit=node_limit))
        if res.outcome == LIMIT:
            raise NodeLimitExceeded(res.nodes_explored)
        if res.outcome == SAT:
            return k, res.coloring
    return None


def assert_lower_bound_5(g, node_limit: int | None = None) -> bool:
    """True iff the graph admits no star 4-edge coloring."""
    res = decide(g, SearchConfig(k=4, node_limit=node_limit))
    if res.outcome == LIMIT:
        raise NodeLimitExceeded(res.nodes_explored)
    return res.outcome == UNSAT
