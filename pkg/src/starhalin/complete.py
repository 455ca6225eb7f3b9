"""Star 5-edge coloring of complete cubic Halin graphs.

Base levels 1..3 come from solver-derived tables; higher levels grow by the
inductive gadget step: pick a cycle vertex v with tree neighbor u and cycle
neighbors s,t, drop vs and vt, hang a 3-level full binary tree below v, run
the path P8 through its 8 leaves and reconnect the ends to s and t.  The 23
new edges are colored by bounded backtracking restricted to them (cached per
normalized boundary context), so every step keeps the coloring star-5 while
leaving old edge colors untouched.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _tables
from .errors import ExpansionFailed, InvalidSpec, StarHalinError
from .graphs import CompleteSpec, HalinGraph, build_complete, canon
from .solver import SAT, SearchConfig, decide
from .verify import EdgeColoring, is_star_k

# new-vertex roles in id order when a gadget is attached
GADGET_VERTEX_ROLES = (
    "x", "y", "x1", "x2", "y1", "y2",
    "x11", "x12", "x21", "x22", "y11", "y12", "y21", "y22",
)

_P8 = ("x11", "x12", "x21", "x22", "y11", "y12", "y21", "y22")

_GADGET_TREE = (
    ("v", "x"), ("v", "y"),
    ("x", "x1"), ("x", "x2"), ("y", "y1"), ("y", "y2"),
    ("x1", "x11"), ("x1", "x12"), ("x2", "x21"), ("x2", "x22"),
    ("y1", "y11"), ("y1", "y12"), ("y2", "y21"), ("y2", "y22"),
)

# the 23 new edges in a fixed role order (14 tree + 7 path + 2 boundary)
GADGET_EDGE_ROLES = (
    _GADGET_TREE
    + tuple((_P8[i], _P8[i + 1]) for i in range(7))
    + (("x11", "s"), ("y22", "t"))
)


@dataclass
class ExpansionState:
    graph: HalinGraph
    coloring: EdgeColoring
    pending: tuple[int, ...]  # original cycle vertices left to expand, in cycle order


_template_cache: dict = {}


def base_complete(l: int) -> EdgeColoring:
    """Cached star 5-coloring of build_complete(l) for l in {1, 2, 3}."""
    if l not in (1, 2, 3):
        raise InvalidSpec(f"base levels are 1..3, got {l}")
    table = _tables.BASE_COMPLETE.get(l)
    if table is not None:
        return EdgeColoring(5, {(u, v): c for u, v, c in table})
    g = build_complete(CompleteSpec(l))
    res = decide(g, SearchConfig(k=5))
    if res.outcome != SAT:
        raise StarHalinError(f"no star 5-coloring found for complete level {l}")
    return res.coloring


def _normalizer(cu: int, cs: int, ct: int) -> tuple[dict[int, int], dict[int, int]]:
    pi = {cu: 1, cs: 2, ct: 3}
    rest = sorted(c for c in range(1, 6) if c not in pi)
    for tgt, c in enumerate(rest, start=4):
        pi[c] = tgt
    inv = {b: a for a, b in pi.items()}
    return pi, inv


def _boundary_key(g: HalinGraph, c: EdgeColoring, v: int, u: int, s: int, t: int, pi):
    def side(a: int):
        desc = []
        for w in g.adjacency[a]:
            if w == v:
                continue
            far = tuple(sorted(pi[c.get(w, z)] for z in g.adjacency[w] if z != a))
            desc.append((pi[c.get(a, w)], far))
        return tuple(sorted(desc))

    return (side(s), side(t))


def expand_at(state: ExpansionState, v: int) -> ExpansionState:
    """One inductive step: splice the gadget in at cycle vertex v."""
    g, col = state.graph, state.coloring
    if v not in state.pending:
        raise InvalidSpec(f"vertex {v} is not pending expansion")
    if not g.is_leaf(v):
        raise InvalidSpec(f"vertex {v} is not a cycle vertex")
    (u,) = g.tree_neighbors(v)
    lo = g.leaf_order
    i = lo.index(v)
    s, t = lo[i - 1], lo[(i + 1) % len(lo)]  # s precedes v on the cycle

    base = g.n
    vid = {role: base + j for j, role in enumerate(GADGET_VERTEX_ROLES)}
    vid["v"], vid["s"], vid["t"] = v, s, t
    new_tree = set(g.tree_edges)
    for a, b in _GADGET_TREE:
        new_tree.add(canon(vid[a], vid[b]))
    new_order = lo[:i] + tuple(vid[r] for r in _P8) + lo[i + 1:]
    new_g = HalinGraph(
        n=g.n + 14,
        tree_edges=frozenset(new_tree),
        leaf_order=new_order,
        root=g.root,
    )

    forced = dict(col.assignment)
    del forced[canon(v, s)]
    del forced[canon(v, t)]
    new_edges = [canon(vid[a], vid[b]) for a, b in GADGET_EDGE_ROLES]

    pi, inv = _normalizer(col[(v, u)], col[(v, s)], col[(v, t)])
    key = _boundary_key(g, col, v, u, s, t, pi)
    assignment = None
    template = _template_cache.get(key)
    if template is not None:
        candidate = dict(forced)
        for e, nc in zip(new_edges, template):
            candidate[e] = inv[nc]
        cand = EdgeColoring(5, candidate)
        if is_star_k(new_g, cand, 5):
            assignment = cand
    if assignment is None:
        res = decide(
            new_g,
            SearchConfig(k=5, forced=forced, free_edges=new_edges),
        )
        if res.outcome != SAT:
            raise ExpansionFailed(
                f"no star-5 assignment for the gadget at vertex {v}"
            )
        assignment = res.coloring
        _template_cache[key] = tuple(pi[assignment[e]] for e in new_edges)
        if not is_star_k(new_g, assignment, 5):
            raise ExpansionFailed("solver output failed re-verification")

    pending = tuple(w for w in state.pending if w != v)
    return ExpansionState(new_g, assignment, pending)


def color_complete(l: int) -> EdgeColoring:
    """Star 5-edge coloring of build_complete(l), on that graph's vertex ids."""
    if l < 1:
        raise InvalidSpec(f"level must be >= 1, got {l}")
    if l <= 3:
        return base_complete(l)

    target = build_complete(CompleteSpec(l))
    children = {
        p: sorted(w for w in target.tree_neighbors(p) if w > p)
        for p in range(target.n)
    }

    seed = build_complete(CompleteSpec(l - 3))
    state = ExpansionState(seed, color_complete(l - 3), seed.leaf_order)
    # build_complete numbers level by level, so the seed's ids coincide with
    # the top levels of the target; track where each gadget vertex lands.
    to_final = {i: i for i in range(seed.n)}
    for v in state.pending:
        prev_n = state.graph.n
        state = expand_at(state, v)
        fv = to_final[v]
        fx, fy = children[fv]
        level2 = children[fx] + children[fy]
        level3 = [w for p in level2 for w in children[p]]
        for j, fid in enumerate([fx, fy] + level2 + level3):
            to_final[prev_n + j] = fid

    mapped = {
        canon(to_final[a], to_final[b]): c
        for (a, b), c in state.coloring.assignment.items()
    }
    if set(mapped) != set(target.edge_pairs):
        raise StarHalinError("expansion did not reproduce the target graph")
    return EdgeColoring(5, mapped)
