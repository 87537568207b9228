"""Generators of target graphs for exhaustive and randomized checks."""

from __future__ import annotations

import itertools
import random
from typing import Iterator

from .foldcore import ALL_LABELS, Codim, Edge, TargetGraph


def _canon(children: dict[int, list[int]], v: int) -> str:
    return "(" + "".join(sorted(_canon(children, c) for c in children[v])) + ")"


def rooted_trees(edges: int) -> list[tuple[int, ...]]:
    """All rooted trees with ``edges`` edges, one per isomorphism class.

    A tree is a parent tuple: vertex i + 1 has parent ``parents[i]`` and
    vertex 0 is the root. Classes are deduplicated through the AHU
    canonical string.
    """
    seen: dict[str, tuple[int, ...]] = {}
    for parents in itertools.product(*(range(i + 1) for i in range(edges))):
        children: dict[int, list[int]] = {v: [] for v in range(edges + 1)}
        for child, par in enumerate(parents, start=1):
            children[par].append(child)
        seen.setdefault(_canon(children, 0), parents)
    return [seen[key] for key in sorted(seen)]


def _vid(i: int, width: int) -> str:
    return f"v{i:0{width}d}"


def graph_from_parents(
    codim: Codim,
    parents: tuple[int, ...],
    labels,
    chi_sing=None,
    chi_region=None,
) -> TargetGraph:
    m = len(parents)
    width = len(str(m))
    chi_sing = chi_sing or [0] * m
    chi_region = chi_region or [0] * (m + 1)
    vertices = {_vid(i, width): chi_region[i] for i in range(m + 1)}
    edges = tuple(
        Edge(_vid(par, width), _vid(child, width), labels[child - 1], chi_sing[child - 1])
        for child, par in enumerate(parents, start=1)
    )
    return TargetGraph(codim, vertices, _vid(0, width), edges)


def exhaustive_graphs(
    max_edges: int, fiber_dims=(2, 3, 4, 5), k: int = 2, chi_range=(0,)
) -> Iterator[TargetGraph]:
    """Every rooted tree with <= ``max_edges`` edges, every edge labelling,
    every fiber dimension in ``fiber_dims``.

    Euler characteristics cycle deterministically through ``chi_range`` so
    that region and singular-set terms are not all zero.
    """
    for m in range(max_edges + 1):
        for parents in rooted_trees(m):
            for labels in itertools.product(ALL_LABELS, repeat=m):
                for fd in fiber_dims:
                    cs = [chi_range[(i + fd) % len(chi_range)] for i in range(m)]
                    cr = [chi_range[(2 * i + 1) % len(chi_range)] for i in range(m + 1)]
                    yield graph_from_parents(Codim(k + fd, k), parents, labels, cs, cr)


def random_graph(
    rng: random.Random,
    max_edges: int = 30,
    fiber_dims=(2, 3, 4, 5),
    ks=(2, 3, 4),
    chi_lo: int = -4,
    chi_hi: int = 4,
) -> TargetGraph:
    m = rng.randint(0, max_edges)
    parents = tuple(rng.randrange(i + 1) for i in range(m))
    k = rng.choice(ks)
    fd = rng.choice(fiber_dims)
    labels = [rng.choice(ALL_LABELS) for _ in range(m)]
    cs = [rng.randint(chi_lo, chi_hi) for _ in range(m)]
    cr = [rng.randint(chi_lo, chi_hi) for _ in range(m + 1)]
    g = graph_from_parents(Codim(k + fd, k), parents, labels, cs, cr)
    # shuffle ids so that lexicographic order is not the BFS order
    ids = list(g.vertices)
    shuffled = ids[:]
    rng.shuffle(shuffled)
    return g.relabel(dict(zip(ids, shuffled)))


def random_sphere_graph(rng: random.Random, n: int, max_edges: int = 30) -> TargetGraph:
    """Random graph with k = 3 and every singular-value component a 2-sphere."""
    m = rng.randint(0, max_edges)
    parents = tuple(rng.randrange(i + 1) for i in range(m))
    labels = [rng.choice(ALL_LABELS) for _ in range(m)]
    cr = [rng.randint(-4, 4) for _ in range(m + 1)]
    return graph_from_parents(Codim(n, 3), parents, labels, [2] * m, cr)
