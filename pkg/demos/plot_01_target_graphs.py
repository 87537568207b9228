"""
Euler characteristics from a target graph
=========================================

A submersion with definite folds N^n -> R^k is summarized by its target
graph: one vertex per region of R^k minus the singular values, one edge per
singular-value component. From the graph alone we recover the Euler
characteristic of N and of every regular fiber.
"""

from foldchi import (
    extension_obstruction,
    fiber_euler,
    fiber_euler_by_walk,
    make_graph,
    total_euler,
    total_euler_mod2,
)

# The projection D^4 -> R^2. The singular values form a circle (chi 0), the
# inner region is an open disk (chi 1), and the fold is a (0,+) fold: the
# fiber is born as a point when the circle is crossed inward.
d4 = make_graph(4, 2, {"out": 0, "in": 1}, "out", [("out", "in", "min+", 0)])
print("chi(D^4) =", total_euler(d4))

# Over the inner disk the regular fiber is a 2-disk.
print("fiber over 'in':", fiber_euler(d4, "in"), "walk:", fiber_euler_by_walk(d4, "in"))

# A second fold circle inside the first, this time of type (n-k-1,+).
# Crossing it caps off the boundary circle of the fiber, so the disk
# becomes a 2-sphere.
annulus = make_graph(
    4, 2,
    {"out": 0, "shell": 0, "core": 1},
    "out",
    [("out", "shell", "min+", 0), ("shell", "core", "max+", 0)],
)
for v in annulus.vertices:
    print(f"  fiber over {v}: chi = {fiber_euler(annulus, v)}")
print("chi(N) =", total_euler(annulus), " mod 2:", total_euler_mod2(annulus))

# The boundary of N^5 -> R^2 given by a single (0,+) circle is S^4. A closed
# 4-manifold M can only be cut along it in a way that extends to a
# non-singular map if chi(M)/2 matches chi(N).
s4 = make_graph(5, 2, {"out": 0, "in": 1}, "out", [("out", "in", "min+", 0)])
for chi_m in (2, 6, 3):
    print(f"chi(M) = {chi_m}:", extension_obstruction(chi_m, s4))
