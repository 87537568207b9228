"""Submersions with definite folds into R (the k = 1 case).

The boundary critical points, read in increasing order of critical value,
form a :class:`CriticalSequence`. From it we rebuild a handle decomposition
of N and report its diffeomorphism type.
"""

from __future__ import annotations

import enum
import os
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InvalidSequence, TheoremTextConventionUnderflow
from .foldcore import (
    MAX_MINUS,
    MAX_PLUS,
    MIN_MINUS,
    MIN_PLUS,
    FoldLabel,
    ValidationReport,
    Violation,
    ViolationKind,
)

HANDLE_PROOF = "handle_proof"
THEOREM_TEXT = "theorem_text"
CONVENTIONS = (HANDLE_PROOF, THEOREM_TEXT)
CONVENTION_ENV = "FOLDCHI_CONVENTION"


@dataclass(frozen=True)
class CriticalSequence:
    """Boundary critical points of F: N^n -> R by increasing critical value.

    MIN labels stand for index 0 and MAX labels for index n - 1.
    """

    n: int
    events: tuple[FoldLabel, ...]

    def __post_init__(self):
        object.__setattr__(self, "events", tuple(self.events))

    @classmethod
    def parse(cls, n: int, labels: Iterable[str] | str) -> "CriticalSequence":
        if isinstance(labels, str):
            labels = [s for s in labels.replace(";", " ").split() if s]
        return cls(n, tuple(FoldLabel.parse(s) for s in labels))

    def count(self, label: FoldLabel) -> int:
        return sum(1 for e in self.events if e == label)

    def __str__(self):
        return " ".join(e.render(self.n - 1) for e in self.events)


def validate_sequence(seq: CriticalSequence) -> ValidationReport:
    """Necessary conditions for ``seq`` to come from a connected N.

    The running number of fiber components goes up at (0,+), down at
    (n-1,-) and is otherwise unchanged. It must stay non-negative, end at
    zero, and be positive whenever an interior surgery happens. For n >= 3
    fiber components never merge, so a connected N has exactly one
    component over every regular value strictly between the first and
    last events; for n = 2 the same shape is forced by the
    hypothesis that regular fibers are circles or arcs.
    """
    out = []
    if seq.n < 2:
        out.append(Violation(ViolationKind.BAD_DIMS, f"need n >= 2, got {seq.n}"))
    if not seq.events:
        out.append(Violation(ViolationKind.EMPTY_SEQUENCE))
        return ValidationReport(tuple(out))

    count = 0
    dipped = disconnected = False
    last = len(seq.events) - 1
    for i, ev in enumerate(seq.events):
        if count == 0 and ev in (MIN_MINUS, MAX_PLUS) and not dipped:
            out.append(Violation(ViolationKind.NEGATIVE_COMPONENTS, f"event {i} ({ev}) acts on an empty fiber"))
            dipped = True
        if ev == MIN_PLUS:
            count += 1
        elif ev == MAX_MINUS:
            count -= 1
        if count < 0 and not dipped:
            out.append(Violation(ViolationKind.NEGATIVE_COMPONENTS, f"fiber empties below zero at event {i}"))
            dipped = True
        if not disconnected and (count > 1 or (count == 0 and i < last)):
            out.append(Violation(ViolationKind.DISCONNECTED_SOURCE, f"fiber has {count} components after event {i}"))
            disconnected = True
    if count != 0 and not dipped:
        out.append(Violation(ViolationKind.NEGATIVE_COMPONENTS, f"{count} fiber components left after the last event"))
    return ValidationReport(tuple(out))


def _require_valid(seq: CriticalSequence) -> None:
    report = validate_sequence(seq)
    if not report.ok:
        raise InvalidSequence(report)


@dataclass(frozen=True)
class HandleList:
    n: int
    handles: tuple[int, ...]

    def counts(self) -> Counter:
        return Counter(self.handles)


def handle_decomposition(seq: CriticalSequence) -> HandleList:
    """One 0-handle, plus an (n-1)-handle for every (n-1,+) event.

    Only the (0,+) and (n-1,+) events change the topology of the sublevel
    set; the negative-sigma events contribute no handle.
    """
    _require_valid(seq)
    p = seq.count(MAX_PLUS)
    return HandleList(seq.n, (0,) + (seq.n - 1,) * p)


def euler_from_handles(h: HandleList) -> int:
    return sum(-1 if i % 2 else 1 for i in h.handles)


class DiffeoKind(enum.Enum):
    SPHERE_MINUS_BALLS = "SphereMinusBalls"
    PLANAR_SURFACE = "PlanarSurface"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class DiffeoType:
    """``SphereMinusBalls``: S^n minus ``count`` open balls.
    ``PlanarSurface``: genus-0 surface with ``count`` boundary circles.
    """

    kind: DiffeoKind
    n: int
    count: int
    convention_note: str = ""

    @property
    def euler(self) -> int:
        if self.kind is DiffeoKind.PLANAR_SURFACE:
            return 2 - self.count
        if self.kind is DiffeoKind.SPHERE_MINUS_BALLS:
            return 1 + (-1) ** self.n - self.count * (-1) ** self.n
        raise ValueError("unknown diffeomorphism type has no Euler characteristic")

    def __str__(self):
        if self.kind is DiffeoKind.PLANAR_SURFACE:
            return f"PlanarSurface({self.count})"
        if self.kind is DiffeoKind.SPHERE_MINUS_BALLS:
            return f"SphereMinusBalls({self.n}, {self.count})"
        return "Unknown"


_NOTES = {
    HANDLE_PROOF: (
        "ball count = #(n-1,+) + 1: one 0-handle with #(n-1,+) trivially attached "
        "(n-1)-handles, each adding a boundary sphere; agrees with the n = 2 planar-surface count"
    ),
    THEOREM_TEXT: "ball count = #(n-1,+) - 1, the alternative count; disagrees with the handle decomposition",
}


def default_convention() -> str:
    value = os.environ.get(CONVENTION_ENV, HANDLE_PROOF)
    if value not in CONVENTIONS:
        raise ValueError(f"{CONVENTION_ENV}={value!r}; expected one of {CONVENTIONS}")
    return value


def diffeotype(seq: CriticalSequence, ball_count_convention: str = HANDLE_PROOF) -> DiffeoType:
    if ball_count_convention not in CONVENTIONS:
        raise ValueError(f"unknown convention {ball_count_convention!r}")
    _require_valid(seq)
    p = seq.count(MAX_PLUS)
    if seq.n == 2:
        return DiffeoType(DiffeoKind.PLANAR_SURFACE, 2, p + 1, "boundary circles = #(1,+) + 1")
    q = p + 1 if ball_count_convention == HANDLE_PROOF else p - 1
    if q <= 0:
        raise TheoremTextConventionUnderflow(f"theorem_text convention gives {q} balls for #(n-1,+) = {p}")
    return DiffeoType(DiffeoKind.SPHERE_MINUS_BALLS, seq.n, q, _NOTES[ball_count_convention])


def valid_sequences(n: int, max_len: int):
    """Yield every valid sequence of length <= ``max_len`` in dimension ``n``.

    Depth-first with pruning on the running component count; the output
    matches filtering all 4^len sequences through :func:`validate_sequence`.
    """
    interior = (MAX_PLUS, MIN_MINUS)

    def extend(prefix, remaining):
        if remaining >= 1:
            yield prefix + (MAX_MINUS,)
        if remaining >= 2:
            for ev in interior:
                yield from extend(prefix + (ev,), remaining - 1)

    for events in extend((MIN_PLUS,), max_len - 1):
        yield CriticalSequence(n, events)


class BlockKind(enum.Enum):
    BASE = "Base"
    GENUS_HANDLE = "GenusHandle"
    CROSS_CAP = "CrossCap"
    BOUNDARY_PUNCTURE = "BoundaryPuncture"
    CAP = "Cap"


# Euler characteristic each block adds when glued on top of the previous ones
BLOCK_EULER = {
    BlockKind.BASE: 1,  # a disk
    BlockKind.GENUS_HANDLE: -2,  # two 1-handles
    BlockKind.CROSS_CAP: -1,  # one twisted 1-handle
    BlockKind.BOUNDARY_PUNCTURE: -1,  # one 1-handle splitting a boundary circle
    BlockKind.CAP: 0,  # collar ending in a (1,-) point
}


@dataclass(frozen=True)
class Block:
    kind: BlockKind
    index: int
    euler: int


@dataclass(frozen=True)
class BlockDecomposition:
    genus: int
    crosscaps: int
    boundary: int
    blocks: tuple[Block, ...]

    @property
    def euler(self) -> int:
        return sum(b.euler for b in self.blocks)


def generate_surface_mfunction(g: int, s: int, b: int) -> BlockDecomposition:
    """Stack blocks into a submersion on (#g T^2 # s RP^2) minus b disks.

    Blocks are listed in the order of their intervals in R.
    """
    if g < 0 or s < 0:
        raise ValueError("genus and cross-cap count must be non-negative")
    if b < 1:
        raise ValueError("a surface with boundary needs b >= 1")
    plan: list[tuple[BlockKind, int]] = [(BlockKind.BASE, 0)]
    plan += [(BlockKind.GENUS_HANDLE, i) for i in range(g)]
    plan += [(BlockKind.CROSS_CAP, i) for i in range(s)]
    plan += [(BlockKind.BOUNDARY_PUNCTURE, i) for i in range(b - 1)]
    plan.append((BlockKind.CAP, 0))
    return BlockDecomposition(g, s, b, tuple(Block(kind, i, BLOCK_EULER[kind]) for kind, i in plan))


class SphereComponent(enum.Enum):
    STANDARD_SPHERE = "StandardSphere"
    OTHER = "Other"


def sphere_extension_exists(components: Sequence[SphereComponent]) -> bool:
    """Does a definite fold map into R on M extend to a submersion?

    True exactly when every component of M is a standard sphere.
    """
    if not components:
        raise ValueError("need at least one component")
    return all(SphereComponent(c) is SphereComponent.STANDARD_SPHERE for c in components)
