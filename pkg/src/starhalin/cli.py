"""Command-line interface.

Machine output (graph/coloring/report JSON) goes to stdout, one document per
line; human diagnostics go to stderr.  Exit codes: 0 success, 1 verification
found violations, 2 invalid input or spec, 3 solver node limit exceeded.
"""

from __future__ import annotations

import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from itertools import product

import click

from .caterpillar import NeedsSixColors, color_caterpillar
from .complete import color_complete
from .errors import InvalidSpec, NodeLimitExceeded, PartialColoring, StarHalinError
from .graphs import (
    CaterpillarSpec,
    CompleteSpec,
    HalinGraph,
    build_caterpillar,
    build_complete,
    build_necklace,
)
from .solver import UNLIMITED_EDGE_BUDGET, chromatic_index
from .verify import EdgeColoring, check_proper, find_star_violations

EXIT_VIOLATIONS = 1
EXIT_INVALID = 2
EXIT_LIMIT = 3

# colors 1..6 in DOT output; the palette carries no meaning beyond legibility
DOT_PALETTE = {
    1: "red", 2: "blue", 3: "forestgreen",
    4: "darkorange", 5: "purple", 6: "goldenrod",
}


def _fail_invalid(msg: str):
    click.echo(f"error: {msg}", err=True)
    sys.exit(EXIT_INVALID)


def _read_graph(path: str) -> HalinGraph:
    try:
        g = HalinGraph.from_json(click.open_file(path).read())
        g.validate()
        return g
    except (OSError, InvalidSpec) as exc:
        _fail_invalid(str(exc))


def _read_coloring(path: str) -> EdgeColoring:
    try:
        return EdgeColoring.from_json(click.open_file(path).read())
    except (OSError, InvalidSpec) as exc:
        _fail_invalid(str(exc))


def _parse_sides(h: int, sides: str) -> tuple[str, ...]:
    want = max(h - 2, 0)
    parsed = tuple(sides.upper()) if sides else ()
    if len(parsed) != want or any(s not in "LR" for s in parsed):
        _fail_invalid(
            f"--sides must be {want} characters from {{L,R}} for --h {h}"
        )
    return parsed


@click.group()
def main():
    """Construct, star-color, and verify cubic Halin graphs."""


def _build(family: str, level: int | None, h: int | None, sides: str):
    try:
        if family == "complete":
            if level is None:
                _fail_invalid("complete requires --level")
            return build_complete(CompleteSpec(level))
        if h is None:
            _fail_invalid(f"{family} requires --h")
        if family == "necklace":
            return build_necklace(h)
        return build_caterpillar(CaterpillarSpec(h, _parse_sides(h, sides)))
    except InvalidSpec as exc:
        _fail_invalid(str(exc))


def _add_family_commands(group, handler):
    @group.command("complete")
    @click.option("--level", type=int, required=True, help="Tree levels below the root.")
    def _complete(level, **kw):
        handler("complete", level=level, h=None, sides="", **kw)

    @group.command("caterpillar")
    @click.option("--h", type=int, required=True, help="Spine length.")
    @click.option("--sides", default="", help="L/R letter per interior spine vertex.")
    def _caterpillar(h, sides, **kw):
        handler("caterpillar", level=None, h=h, sides=sides, **kw)

    @group.command("necklace")
    @click.option("--h", type=int, required=True, help="Spine length (all leaves one side).")
    def _necklace(h, **kw):
        handler("necklace", level=None, h=h, sides="", **kw)

    return _complete, _caterpillar, _necklace


@main.group()
def gen():
    """Emit a graph as JSON."""


def _gen_handler(family, level, h, sides):
    click.echo(_build(family, level, h, sides).to_json())


_add_family_commands(gen, _gen_handler)


@main.group()
def color():
    """Emit a graph and a constructive star edge coloring as JSON."""


def _color_handler(family, level, h, sides, check):
    g = _build(family, level, h, sides)
    try:
        if family == "complete":
            result = color_complete(level)
        else:
            spec = CaterpillarSpec(h, ("L",) * max(h - 2, 0)) \
                if family == "necklace" else CaterpillarSpec(h, _parse_sides(h, sides))
            result = color_caterpillar(spec)
    except StarHalinError as exc:
        _fail_invalid(str(exc))
    if isinstance(result, NeedsSixColors):
        click.echo("no star 5-edge coloring exists; emitting a 6-color witness",
                   err=True)
        result = result.witness
    if check:
        bad = check_proper(g, result) or find_star_violations(g, result)
        if bad:
            for v in bad:
                click.echo(json.dumps({"kind": v.kind, "witness": list(v.witness)}))
            sys.exit(EXIT_VIOLATIONS)
    click.echo(g.to_json())
    click.echo(result.to_json())


for _cmd in _add_family_commands(
    color, lambda *a, **kw: _color_handler(*a, **kw)
):
    click.option("--check/--no-check", default=True,
                 help="Re-verify the coloring before emitting.")(_cmd)


@main.command()
@click.option("--graph", "graph_path", required=True, type=click.Path())
@click.option("--coloring", "coloring_path", required=True, type=click.Path())
def verify(graph_path, coloring_path):
    """Check a coloring; violations are printed as JSON lines."""
    g = _read_graph(graph_path)
    c = _read_coloring(coloring_path)
    try:
        violations = check_proper(g, c)
        if not violations:
            violations = find_star_violations(g, c)
    except PartialColoring as exc:
        _fail_invalid(str(exc))
    for v in violations:
        click.echo(json.dumps({"kind": v.kind, "witness": list(v.witness)},
                              sort_keys=True, separators=(",", ":")))
    if violations:
        click.echo(f"{len(violations)} violation(s)", err=True)
        sys.exit(EXIT_VIOLATIONS)
    click.echo("ok", err=True)


@main.command()
@click.option("--graph", "graph_path", required=True, type=click.Path())
@click.option("--kmax", type=int, default=6, show_default=True)
@click.option("--node-limit", type=int, default=None)
def chi(graph_path, kmax, node_limit):
    """Exact star chromatic index (smallest k <= kmax), with a witness."""
    g = _read_graph(graph_path)
    if node_limit is None and len(g.edges) > UNLIMITED_EDGE_BUDGET:
        _fail_invalid(
            f"graphs with more than {UNLIMITED_EDGE_BUDGET} edges need an "
            "explicit --node-limit"
        )
    try:
        found = chromatic_index(g, kmax=kmax, node_limit=node_limit)
    except NodeLimitExceeded as exc:
        click.echo(f"node limit exceeded after {exc.nodes} nodes", err=True)
        sys.exit(EXIT_LIMIT)
    if found is None:
        click.echo(json.dumps({"chi": None, "kmax": kmax},
                              sort_keys=True, separators=(",", ":")))
        return
    k, witness = found
    click.echo(json.dumps({"chi": k}, sort_keys=True, separators=(",", ":")))
    click.echo(witness.to_json())


def _sweep_one(args):
    h, sides = args
    spec = CaterpillarSpec(h, sides)
    g = build_caterpillar(spec)
    result = color_caterpillar(spec)
    witness = result.witness if isinstance(result, NeedsSixColors) else result
    bad = check_proper(g, witness) or find_star_violations(g, witness)
    return json.dumps(
        {
            "spec": {"h": h, "sides": "".join(sides)},
            "k_used": max(witness.colors_used()),
            "verified": not bad,
            "violations": [
                {"kind": v.kind, "witness": list(v.witness)} for v in bad
            ],
        },
        sort_keys=True, separators=(",", ":"),
    )


@main.group()
def sweep():
    """Color and verify whole families, one JSON report line per instance."""


@sweep.command("caterpillar")
@click.option("--max-h", type=int, required=True)
@click.option("--sample", type=int, default=None,
              help="Verify only this many randomly chosen instances.")
@click.option("--jobs", type=int, default=1, show_default=True)
def sweep_caterpillar(max_h, sample, jobs):
    if max_h < 1:
        _fail_invalid(f"--max-h must be >= 1, got {max_h}")
    specs = [
        (h, sides)
        for h in range(1, max_h + 1)
        for sides in product("LR", repeat=max(h - 2, 0))
    ]
    if sample is not None and sample < len(specs):
        specs = random.sample(specs, sample)
    any_bad = False
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for line in pool.map(_sweep_one, specs):
                any_bad |= not json.loads(line)["verified"]
                click.echo(line)
    else:
        for spec in specs:
            line = _sweep_one(spec)
            any_bad |= not json.loads(line)["verified"]
            click.echo(line)
    if any_bad:
        sys.exit(EXIT_VIOLATIONS)


@main.command("export-dot")
@click.option("--graph", "graph_path", required=True, type=click.Path())
@click.option("--coloring", "coloring_path", default=None, type=click.Path())
def export_dot(graph_path, coloring_path):
    """Emit the graph as DOT; with a coloring, edges get palette colors."""
    g = _read_graph(graph_path)
    c = _read_coloring(coloring_path) if coloring_path else None
    lines = ["graph halin {"]
    for u, v in sorted(g.edge_pairs):
        style = "solid" if (u, v) in g.tree_edges else "dashed"
        attrs = [f"style={style}"]
        if c is not None:
            col = c.get(u, v)
            if col is None:
                _fail_invalid(f"coloring is missing edge ({u}, {v})")
            attrs.append(f'color={DOT_PALETTE.get(col, "black")}')
            attrs.append(f'label="{col}"')
        lines.append(f"  {u} -- {v} [{', '.join(attrs)}];")
    lines.append("}")
    click.echo("\n".join(lines))


if __name__ == "__main__":
    main()
