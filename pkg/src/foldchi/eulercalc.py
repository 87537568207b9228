"""Euler characteristics of source manifolds read off a target graph.

The closed formula for the regular fiber over a region counts fold labels on
the root path. :func:`fiber_euler_by_walk` recomputes the same number by
replaying the four fiber surgeries one crossing at a time; it shares no code
with :func:`fiber_euler` and exists to be checked against it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    InvalidGraph,
    NonSphericalSingularValue,
    OddSourceDimension,
    UnknownVertex,
    WrongCodim,
)
from .foldcore import (
    MAX_MINUS,
    MAX_PLUS,
    MIN_PLUS,
    FoldLabel,
    Lam,
    Sigma,
    TargetGraph,
    depths,
    path_label_counts,
)


def _require_valid(g: TargetGraph) -> None:
    if not g.report.ok:
        raise InvalidGraph(g.report)


def _sign(exponent: int) -> int:
    return -1 if exponent % 2 else 1


def fiber_euler(g: TargetGraph, v: str) -> int:
    """Euler characteristic of the regular fiber over the region ``v``."""
    c = path_label_counts(g, v)
    return c.min_plus - c.max_minus + _sign(g.codim.fiber_dim - 1) * (c.min_minus - c.max_plus)


@dataclass
class FiberWalkState:
    """Running Euler characteristic of the regular fiber during a walk.

    The fiber over the unbounded region is empty, so a walk starts at 0.
    """

    chi: int = 0
    steps: list[FoldLabel] = field(default_factory=list)

    def cross(self, label: FoldLabel, fiber_dim: int) -> None:
        # fiber_dim = n - k; the fiber is a compact fiber_dim-manifold
        if label.lam is Lam.MIN and label.sigma is Sigma.PLUS:
            delta = 1  # new disk component
        elif label.lam is Lam.MAX and label.sigma is Sigma.PLUS:
            delta = (-1) ** fiber_dim  # cap a sphere boundary with a disk
        elif label.lam is Lam.MIN and label.sigma is Sigma.MINUS:
            delta = -((-1) ** fiber_dim)  # puncture: remove an open ball
        else:
            delta = -1  # a disk component disappears
        self.chi += delta
        self.steps.append(label)


def walk_fiber(g: TargetGraph, v: str) -> FiberWalkState:
    if v not in g.vertices:
        raise UnknownVertex(v)
    parent_edge = {}
    for e in g.edges:
        parent_edge[e.head] = e
    crossings = []
    cur = v
    while cur != g.root:
        e = parent_edge[cur]
        crossings.append(e.label)
        cur = e.tail
    state = FiberWalkState()
    for label in reversed(crossings):
        state.cross(label, g.codim.n - g.codim.k)
    return state


def fiber_euler_by_walk(g: TargetGraph, v: str) -> int:
    return walk_fiber(g, v).chi


def total_euler(g: TargetGraph) -> int:
    """Euler characteristic of the source manifold N."""
    _require_valid(g)
    fiber_dim = g.codim.fiber_dim
    total = 0
    for e in g.edges:
        if e.label == MIN_PLUS:
            total += e.chi_sing
        elif e.label == MAX_PLUS:
            total += _sign(fiber_dim) * e.chi_sing
        total += (g.vertices[e.head] - e.chi_sing) * fiber_euler(g, e.head)
    return total


def total_euler_mod2(g: TargetGraph) -> int:
    """Parity of the Euler characteristic computed from depths alone."""
    _require_valid(g)
    d = depths(g)
    total = 0
    for e in g.edges:
        total += (g.vertices[e.head] + e.chi_sing) * d[e.head]
        if e.label.sigma is Sigma.PLUS:
            total += e.chi_sing
    return total % 2


def simply_connected_mod2(g: TargetGraph) -> int:
    """Parity for k = 3, n = 2l + 1 >= 5 when the boundary is simply connected.

    Every singular-value component is then a 2-sphere; the caller must supply
    ``chi_sing == 2`` on every edge.
    """
    n, k = g.codim.n, g.codim.k
    if k != 3 or n < 5 or n % 2 == 0:
        raise WrongCodim(f"need k = 3 and odd n >= 5, got n={n}, k={k}")
    _require_valid(g)
    bad = [f"{e.tail}->{e.head}" for e in g.edges if e.chi_sing != 2]
    if bad:
        raise NonSphericalSingularValue("chi_sing != 2 on " + ", ".join(bad))
    d = depths(g)
    return sum(g.vertices[e.head] * d[e.head] for e in g.edges) % 2


@dataclass(frozen=True)
class ExtensionVerdict:
    """Outcome of comparing half the boundary Euler characteristic with the graph side."""

    lhs: Fraction
    rhs: int

    @property
    def consistent(self) -> bool:
        return self.lhs == self.rhs

    @property
    def obstructed(self) -> bool:
        return not self.consistent

    def __str__(self):
        if self.consistent:
            return f"Consistent({self.rhs})"
        return f"Obstructed({self.lhs}, {self.rhs})"


def extension_obstruction(chi_boundary: int, g: TargetGraph) -> ExtensionVerdict:
    """Necessary condition for a non-singular extension of the boundary map.

    ``g`` describes the extension N (dimension n = m + 1, m even); the
    boundary M has Euler characteristic ``chi_boundary``.
    """
    m = g.codim.n - 1
    if m % 2:
        raise OddSourceDimension(f"boundary dimension m = {m} is odd")
    _require_valid(g)
    k = g.codim.k
    rhs = 0
    for e in g.edges:
        if e.label == MIN_PLUS:
            rhs += e.chi_sing
        elif e.label == MAX_PLUS:
            rhs += _sign(m - k + 1) * e.chi_sing
        rhs += (g.vertices[e.head] - e.chi_sing) * fiber_euler(g, e.head)
    return ExtensionVerdict(Fraction(chi_boundary, 2), rhs)


def realizability_warnings(g: TargetGraph) -> list[str]:
    """Best-effort hints that a labelling cannot come from an actual map.

    Tracks the number of components of the regular fiber along each root
    path. With fiber dimension >= 2 only a (min,+) crossing creates a
    component and only a (max,-) crossing destroys one, so any other
    surgery on an empty fiber is suspicious. Never blocks computation.
    """
    warnings = []
    counts = {g.root: 0}
    stack = [g.root]
    while stack:
        u = stack.pop()
        for e in g.children(u):
            c = counts[u]
            if e.label == MIN_PLUS:
                c += 1
            elif c == 0:
                warnings.append(f"edge {e.tail}->{e.head} {e.label} acts on an empty fiber")
            elif e.label == MAX_MINUS:
                c -= 1
            counts[e.head] = c
            stack.append(e.head)
    return sorted(warnings)

