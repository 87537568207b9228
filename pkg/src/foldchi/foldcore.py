"""Target graphs of image-simple definite fold maps and their validation.

A target graph is a rooted tree. Vertices are the complement regions of the
singular value set in R^k, the root is the unbounded region, and each edge
crosses one singular-value component in the direction of increasing depth.
Edges carry a fold label ``(lambda, sigma)`` and the Euler characteristic of
the component they cross; vertices carry the Euler characteristic of their
open region.
"""

from __future__ import annotations

import enum
from collections import defaultdict, deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping

from .errors import UnknownVertex


class Lam(enum.Enum):
    """Index class of a definite fold: no negative squares, or all of them."""

    MIN = "min"
    MAX = "max"


class Sigma(enum.Enum):
    PLUS = "+"
    MINUS = "-"


@dataclass(frozen=True)
class FoldLabel:
    lam: Lam
    sigma: Sigma

    def __post_init__(self):
        if not isinstance(self.lam, Lam) or not isinstance(self.sigma, Sigma):
            raise TypeError(f"bad fold label ({self.lam!r}, {self.sigma!r})")

    @classmethod
    def parse(cls, text: str) -> "FoldLabel":
        """Parse ``"min+"``, ``"max-"``, ``"(min,+)"`` and friends."""
        s = text.strip().strip("()").replace(",", "").replace(" ", "")
        if len(s) < 2 or s[-1] not in "+-":
            raise ValueError(f"cannot parse fold label {text!r}")
        head = s[:-1].lower()
        if head in ("min", "0"):
            lam = Lam.MIN
        elif head == "max":
            lam = Lam.MAX
        else:
            raise ValueError(f"cannot parse fold label {text!r}")
        return cls(lam, Sigma(s[-1]))

    def index(self, top: int) -> int:
        """Numeric lambda, given the index ``top`` of the MAX class."""
        return 0 if self.lam is Lam.MIN else top

    def render(self, top: int | None = None) -> str:
        lam = self.lam.value if top is None else str(self.index(top))
        return f"({lam},{self.sigma.value})"

    def __str__(self):
        return f"{self.lam.value}{self.sigma.value}"


MIN_PLUS = FoldLabel(Lam.MIN, Sigma.PLUS)
MIN_MINUS = FoldLabel(Lam.MIN, Sigma.MINUS)
MAX_PLUS = FoldLabel(Lam.MAX, Sigma.PLUS)
MAX_MINUS = FoldLabel(Lam.MAX, Sigma.MINUS)
ALL_LABELS = (MIN_PLUS, MIN_MINUS, MAX_PLUS, MAX_MINUS)


@dataclass(frozen=True)
class Codim:
    """Source dimension ``n`` and target dimension ``k``.

    Construction does not check anything; :func:`validate_target_graph`
    reports bad dimensions instead.
    """

    n: int
    k: int

    @property
    def fiber_dim(self) -> int:
        return self.n - self.k

    @property
    def max_index(self) -> int:
        return self.n - self.k - 1


@dataclass(frozen=True)
class Edge:
    tail: str
    head: str
    label: FoldLabel
    chi_sing: int


@dataclass(frozen=True, eq=False)
class TargetGraph:
    """Immutable rooted target graph.

    ``vertices`` maps vertex id to the Euler characteristic of its open
    region. The root's value is stored but never used by any formula.
    """

    codim: Codim
    vertices: Mapping[str, int]
    root: str
    edges: tuple[Edge, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "vertices", dict(sorted(self.vertices.items())))
        object.__setattr__(
            self, "edges", tuple(sorted(self.edges, key=lambda e: (e.tail, e.head, str(e.label), e.chi_sing)))
        )

    def __eq__(self, other):
        if not isinstance(other, TargetGraph):
            return NotImplemented
        return (self.codim, self.vertices, self.root, self.edges) == (
            other.codim,
            other.vertices,
            other.root,
            other.edges,
        )

    __hash__ = None

    @property
    def vertex_ids(self) -> list[str]:
        return list(self.vertices)

    def chi_region(self, v: str) -> int:
        try:
            return self.vertices[v]
        except KeyError:
            raise UnknownVertex(v) from None

    @cached_property
    def _incoming(self) -> dict[str, Edge]:
        return {e.head: e for e in self.edges}

    @cached_property
    def _children(self) -> dict[str, list[Edge]]:
        out: dict[str, list[Edge]] = defaultdict(list)
        for e in self.edges:
            out[e.tail].append(e)
        return out

    def incoming(self, v: str) -> Edge | None:
        """The edge whose head is ``v`` (``None`` for the root)."""
        if v not in self.vertices:
            raise UnknownVertex(v)
        return self._incoming.get(v)

    def children(self, v: str) -> list[Edge]:
        if v not in self.vertices:
            raise UnknownVertex(v)
        return list(self._children.get(v, ()))

    def root_path(self, v: str) -> list[Edge]:
        """Edges from the root down to ``v``, root end first."""
        if v not in self.vertices:
            raise UnknownVertex(v)
        path = []
        seen = set()
        while v != self.root:
            e = self._incoming.get(v)
            if e is None or v in seen:
                raise ValueError(f"vertex {v!r} is not reachable from the root")
            seen.add(v)
            path.append(e)
            v = e.tail
        path.reverse()
        return path

    @cached_property
    def report(self) -> "ValidationReport":
        return validate_target_graph(self)

    def relabel(self, mapping: Mapping[str, str]) -> "TargetGraph":
        """Rename vertices; ids missing from ``mapping`` are kept."""
        m = lambda v: mapping.get(v, v)  # noqa: E731
        return TargetGraph(
            self.codim,
            {m(v): chi for v, chi in self.vertices.items()},
            m(self.root),
            tuple(Edge(m(e.tail), m(e.head), e.label, e.chi_sing) for e in self.edges),
        )


class ViolationKind(enum.Enum):
    NOT_A_TREE = "NotATree"
    BAD_ORIENTATION = "BadOrientation"
    MULTIPLE_PARENTS = "MultipleParents"
    CODIM_TOO_SMALL = "CodimTooSmall"
    BAD_DIMS = "BadDims"
    DANGLING_EDGE = "DanglingEdge"
    UNKNOWN_ROOT = "UnknownRoot"
    DEPTH_MISMATCH = "DepthMismatch"
    # critical sequences (mfunctions)
    EMPTY_SEQUENCE = "EmptySequence"
    NEGATIVE_COMPONENTS = "NegativeComponents"
    DISCONNECTED_SOURCE = "DisconnectedSource"


@dataclass(frozen=True)
class Violation:
    kind: ViolationKind
    detail: str = ""

    def __str__(self):
        return f"{self.kind.value}: {self.detail}" if self.detail else self.kind.value


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok

    def kinds(self) -> set[ViolationKind]:
        return {v.kind for v in self.violations}


def validate_target_graph(g: TargetGraph) -> ValidationReport:
    """Check dimensions and tree structure; never raises on bad data."""
    out: list[Violation] = []
    n, k = g.codim.n, g.codim.k
    if k < 1 or n <= k:
        out.append(Violation(ViolationKind.BAD_DIMS, f"need n > k >= 1, got n={n}, k={k}"))
    elif n - k < 2:
        out.append(Violation(ViolationKind.CODIM_TOO_SMALL, f"n - k = {n - k} < 2"))

    verts = g.vertices
    if g.root not in verts:
        out.append(Violation(ViolationKind.UNKNOWN_ROOT, f"root {g.root!r} is not a vertex"))

    good_edges = []
    for e in g.edges:
        missing = [x for x in (e.tail, e.head) if x not in verts]
        if missing:
            out.append(Violation(ViolationKind.DANGLING_EDGE, f"{e.tail}->{e.head} references {', '.join(missing)}"))
        else:
            good_edges.append(e)

    # undirected structure
    tree_problems = []
    pairs = set()
    adj: dict[str, set[str]] = {v: set() for v in verts}
    for e in good_edges:
        if e.tail == e.head:
            tree_problems.append(f"loop at {e.tail}")
            continue
        key = frozenset((e.tail, e.head))
        if key in pairs:
            tree_problems.append(f"multiple edges between {min(key)} and {max(key)}")
            continue
        pairs.add(key)
        adj[e.tail].add(e.head)
        adj[e.head].add(e.tail)
    if len(g.edges) != len(verts) - 1:
        tree_problems.append(f"{len(g.edges)} edges for {len(verts)} vertices")

    dist: dict[str, int] = {}
    if g.root in verts:
        dist[g.root] = 0
        queue = deque([g.root])
        while queue:
            u = queue.popleft()
            for w in sorted(adj[u]):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        unreached = [v for v in verts if v not in dist]
        if unreached:
            tree_problems.append("disconnected: " + ", ".join(unreached[:5]) + ("..." if len(unreached) > 5 else ""))
    for p in tree_problems:
        out.append(Violation(ViolationKind.NOT_A_TREE, p))

    indeg: dict[str, int] = defaultdict(int)
    for e in good_edges:
        indeg[e.head] += 1
    for v in sorted(indeg):
        if indeg[v] > 1:
            out.append(Violation(ViolationKind.MULTIPLE_PARENTS, f"{v} has {indeg[v]} incoming edges"))

    if not tree_problems and g.root in verts:
        for e in good_edges:
            if dist[e.head] != dist[e.tail] + 1:
                out.append(Violation(ViolationKind.BAD_ORIENTATION, f"{e.tail}->{e.head} points toward the root"))

    return ValidationReport(tuple(out))


@dataclass(frozen=True)
class DepthCounts:
    min_plus: int = 0
    min_minus: int = 0
    max_plus: int = 0
    max_minus: int = 0

    @property
    def total(self) -> int:
        return self.min_plus + self.min_minus + self.max_plus + self.max_minus

    def __getitem__(self, label: FoldLabel) -> int:
        return getattr(self, f"{label.lam.value}_{'plus' if label.sigma is Sigma.PLUS else 'minus'}")


def depth(g: TargetGraph, v: str) -> int:
    return len(g.root_path(v))


def depths(g: TargetGraph) -> dict[str, int]:
    """Depth of every vertex in one pass."""
    out = {g.root: 0}
    stack = [g.root]
    while stack:
        u = stack.pop()
        for e in g.children(u):
            out[e.head] = out[u] + 1
            stack.append(e.head)
    return out


def path_label_counts(g: TargetGraph, v: str) -> DepthCounts:
    counts = {label: 0 for label in ALL_LABELS}
    for e in g.root_path(v):
        counts[e.label] += 1
    return DepthCounts(counts[MIN_PLUS], counts[MIN_MINUS], counts[MAX_PLUS], counts[MAX_MINUS])


def make_graph(n: int, k: int, vertices: Mapping[str, int], root: str, edges: Iterable[tuple]) -> TargetGraph:
    """Convenience constructor: edges as ``(tail, head, label, chi_sing)``.

    ``label`` may be a :class:`FoldLabel` or a string such as ``"min+"``.
    """
    es = []
    for tail, head, label, chi in edges:
        if isinstance(label, str):
            label = FoldLabel.parse(label)
        es.append(Edge(tail, head, label, chi))
    return TargetGraph(Codim(n, k), vertices, root, tuple(es))
