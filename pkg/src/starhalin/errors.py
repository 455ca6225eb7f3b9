"""Exception types shared across the package."""

from __future__ import annotations


class StarHalinError(Exception):
    """Base class for all package errors."""


class InvalidSpec(StarHalinError):
    """A generator spec violates its preconditions."""


class PartialColoring(StarHalinError):
    """An operation that requires a total coloring received a partial one."""


class ImproperColoring(StarHalinError):
    """A star check was asked about a coloring that is not even proper.

    Carries the properness violations as ``self.violations``.
    """

    def __init__(self, violations):
        super().__init__(f"coloring is not proper ({len(violations)} conflicts)")
        self.violations = list(violations)


class NodeLimitExceeded(StarHalinError):
    """The exact search hit its node limit before reaching a verdict."""

    def __init__(self, nodes: int):
        super().__init__(f"search node limit exceeded after {nodes} nodes")
        self.nodes = nodes


class ExpansionFailed(StarHalinError):
    """No valid coloring of the gadget edges exists (should be impossible)."""


class ReductionUnavailable(StarHalinError):
    """Caterpillar reduction requires at least 6 spine vertices."""


class MalformedReduction(StarHalinError):
    """The reduced graph does not match either expected local shape."""


class UnreachableContext(StarHalinError):
    """No extension subcase matches the observed local colors."""


class PlanRejected(StarHalinError):
    """An extension plan produced a coloring the verifier rejected.

    Carries the violations as ``self.violations``.
    """

    def __init__(self, violations):
        super().__init__(f"extension plan rejected ({len(violations)} violations)")
        self.violations = list(violations)
