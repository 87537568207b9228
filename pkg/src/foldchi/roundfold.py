"""Target graphs for concrete arrangements of singular-value spheres.

Each singular-value component is an embedded (k-1)-sphere. A bounded region
whose outer sphere has j spheres immediately inside it deformation-retracts
onto a wedge of j copies of S^(k-1), so its Euler characteristic is
1 + j * (-1)^(k-1).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .errors import CodimTooSmall, NotAForest, WrongCodim
from .foldcore import Codim, Edge, FoldLabel, TargetGraph

ROOT_ID = "v0"


def sphere_euler(k: int) -> int:
    """Euler characteristic of S^(k-1)."""
    return 1 + (-1) ** (k - 1)


def region_euler(k: int, inner_spheres: int) -> int:
    return 1 + inner_spheres * (-1) ** (k - 1)


def _check_codim(codim: Codim) -> None:
    if codim.k < 2:
        raise WrongCodim(f"sphere arrangements need k >= 2, got k={codim.k}")
    if codim.n - codim.k < 2:
        raise CodimTooSmall(f"n - k = {codim.n - codim.k} < 2")


def target_graph_from_round(codim: Codim, labels_outer_to_inner: Sequence[FoldLabel | str]) -> TargetGraph:
    """Path graph for concentric spheres of radii 1..r.

    ``labels_outer_to_inner[0]`` labels the outermost sphere (radius r).
    Vertex ``v{i}`` is the region inside the i-th sphere counted from the
    outside; ``v0`` is the unbounded region.
    """
    _check_codim(codim)
    k = codim.k
    r = len(labels_outer_to_inner)
    vertices = {ROOT_ID: 0}
    edges = []
    for i, label in enumerate(labels_outer_to_inner, start=1):
        if isinstance(label, str):
            label = FoldLabel.parse(label)
        vertices[f"v{i}"] = region_euler(k, 0 if i == r else 1)
        edges.append(Edge(f"v{i - 1}", f"v{i}", label, sphere_euler(k)))
    return TargetGraph(codim, vertices, ROOT_ID, tuple(edges))


@dataclass(frozen=True)
class Sphere:
    """One singular-value sphere; ``parent`` is the sphere immediately outside it."""

    id: str
    label: FoldLabel
    parent: str | None = None

    def __post_init__(self):
        if isinstance(self.label, str):
            object.__setattr__(self, "label", FoldLabel.parse(self.label))


@dataclass(frozen=True)
class NestingForest:
    spheres: tuple[Sphere, ...]

    def __post_init__(self):
        object.__setattr__(self, "spheres", tuple(self.spheres))

    @classmethod
    def nested(cls, labels_outer_to_inner: Sequence[FoldLabel]) -> "NestingForest":
        """A linear nest; sphere ids match the vertex ids of :func:`target_graph_from_round`."""
        spheres = []
        for i, label in enumerate(labels_outer_to_inner, start=1):
            spheres.append(Sphere(f"v{i}", label, f"v{i - 1}" if i > 1 else None))
        return cls(tuple(spheres))


def target_graph_from_forest(codim: Codim, forest: NestingForest, root: str = ROOT_ID) -> TargetGraph:
    """Target graph of an arbitrary nest of disjoint spheres.

    The region just inside sphere ``s`` gets vertex id ``s.id``.
    """
    _check_codim(codim)
    by_id: dict[str, Sphere] = {}
    for s in forest.spheres:
        if s.id in by_id:
            raise NotAForest(f"sphere id {s.id!r} appears twice")
        if s.id == root:
            raise NotAForest(f"sphere id {s.id!r} collides with the root id")
        by_id[s.id] = s
    for s in forest.spheres:
        if s.parent is not None and s.parent not in by_id:
            raise NotAForest(f"sphere {s.id!r} has unknown parent {s.parent!r}")
    for s in forest.spheres:
        seen = {s.id}
        cur = s.parent
        while cur is not None:
            if cur in seen:
                raise NotAForest(f"nesting cycle through {cur!r}")
            seen.add(cur)
            cur = by_id[cur].parent

    inner = {s.id: 0 for s in forest.spheres}
    for s in forest.spheres:
        if s.parent is not None:
            inner[s.parent] += 1
    k = codim.k
    vertices = {root: 0}
    edges = []
    for s in forest.spheres:
        vertices[s.id] = region_euler(k, inner[s.id])
        edges.append(Edge(s.parent if s.parent is not None else root, s.id, s.label, sphere_euler(k)))
    return TargetGraph(codim, vertices, root, tuple(edges))


class Hypothesis(enum.Enum):
    MONODROMY = "monodromy"
    ORIENTABILITY = "orientability"
    CENTRAL_FIBER = "central_fiber"


@dataclass(frozen=True)
class Certificate:
    graph_manifold: bool
    failed: Hypothesis | None = None

    def __str__(self):
        return "GraphManifold" if self.graph_manifold else f"NotCertified({self.failed.value})"


def certify_graph_manifold(
    periodic_monodromy: bool, fiber_orientable: bool, central_fiber_no_circles: bool
) -> Certificate:
    """Check the hypotheses under which a 3-manifold with a round-fold boundary
    submersion to the plane is a graph manifold. Reports the first that fails.
    """
    for ok, hyp in (
        (periodic_monodromy, Hypothesis.MONODROMY),
        (fiber_orientable, Hypothesis.ORIENTABILITY),
        (central_fiber_no_circles, Hypothesis.CENTRAL_FIBER),
    ):
        if not ok:
            return Certificate(False, hyp)
    return Certificate(True)
