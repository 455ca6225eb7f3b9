"""Regenerate _tables.py from the exact solver.

Usage:  python -m starhalin.gen_tables

Freezes the base colorings (complete levels 1..3, caterpillars h <= 5) and
the extension templates collected from a full caterpillar sweep up to h = 12.
Every frozen entry is produced by the solver and re-verified before writing.
"""

from __future__ import annotations

import pprint
import sys
from itertools import product
from pathlib import Path

from . import caterpillar as cat
from .graphs import CaterpillarSpec, CompleteSpec, build_caterpillar, build_complete
from .solver import SAT, SearchConfig, decide
from .verify import is_star_k

HEADER = '''"""Generated coloring tables. Do not edit by hand.

Regenerate with:  python -m starhalin.gen_tables
Entries are derived by the exact solver and re-verified in tests; when an
entry is missing, callers fall back to computing it on the fly.
"""
'''


def _solve5(g):
    res = decide(g, SearchConfig(k=5))
    if res.outcome != SAT:
        raise RuntimeError("expected a star 5-coloring")
    assert is_star_k(g, res.coloring, 5)
    return sorted([u, v, c] for (u, v), c in res.coloring.assignment.items())


def build_tables():
    base_complete = {
        l: _solve5(build_complete(CompleteSpec(l))) for l in (1, 2, 3)
    }
    base_caterpillar = {}
    for h in (1, 3, 4, 5):
        for sides in product("LR", repeat=max(h - 2, 0)):
            spec = CaterpillarSpec(h, sides)
            base_caterpillar[(h, sides)] = _solve5(build_caterpillar(spec))

    cat._template_cache.clear()
    for h in range(6, 13):
        for sides in product("LR", repeat=h - 2):
            spec = CaterpillarSpec(h, sides)
            c = cat.color_caterpillar(spec)
            assert is_star_k(build_caterpillar(spec), c, 5)
    templates = dict(sorted(cat._template_cache.items()))
    return base_complete, base_caterpillar, templates


def main() -> int:
    base_complete, base_caterpillar, templates = build_tables()
    out = Path(__file__).with_name("_tables.py")
    with out.open("w") as fh:
        fh.write(HEADER)
        fh.write("\n# level -> [[u, v, color], ...] for build_complete(level)\n")
        fh.write(f"BASE_COMPLETE: dict = {pprint.pformat(base_complete)}\n")
        fh.write("\n# (h, sides) -> [[u, v, color], ...]"
                 " for build_caterpillar(h, sides)\n")
        fh.write(f"BASE_CATERPILLAR: dict = {pprint.pformat(base_caterpillar)}\n")
        fh.write("\n# subcase 2.3.2.2 context key -> normalized extension template\n")
        fh.write(f"EXTENSION_TEMPLATES: dict = {pprint.pformat(templates)}\n")
    print(f"wrote {out}: {len(base_complete)} complete bases, "
          f"{len(base_caterpillar)} caterpillar bases, "
          f"{len(templates)} extension templates", file=sys.stderr)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
