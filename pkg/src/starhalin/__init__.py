"""Star edge colorings of cubic Halin graphs: builders, oracle, constructions."""

from .caterpillar import NeedsSixColors, color_caterpillar
from .complete import color_complete, expand_at
from .errors import (
    ExpansionFailed,
    ImproperColoring,
    InvalidSpec,
    MalformedReduction,
    NodeLimitExceeded,
    PartialColoring,
    PlanRejected,
    ReductionUnavailable,
    StarHalinError,
    UnreachableContext,
)
from .graphs import (
    CaterpillarSpec,
    CompleteSpec,
    HalinGraph,
    build_caterpillar,
    build_complete,
    build_necklace,
    mirror,
)
from .solver import SearchConfig, SolveResult, assert_lower_bound_5, chromatic_index, decide
from .verify import EdgeColoring, Violation, find_star_violations, is_star_k

__all__ = [
    "CaterpillarSpec",
    "CompleteSpec",
    "EdgeColoring",
    "ExpansionFailed",
    "HalinGraph",
    "ImproperColoring",
    "InvalidSpec",
    "MalformedReduction",
    "NeedsSixColors",
    "NodeLimitExceeded",
    "PartialColoring",
    "PlanRejected",
    "ReductionUnavailable",
    "SearchConfig",
    "SolveResult",
    "StarHalinError",
    "UnreachableContext",
    "Violation",
    "assert_lower_bound_5",
    "build_caterpillar",
    "build_complete",
    "build_necklace",
    "chromatic_index",
    "color_caterpillar",
    "color_complete",
    "decide",
    "expand_at",
    "find_star_violations",
    "is_star_k",
    "mirror",
]
