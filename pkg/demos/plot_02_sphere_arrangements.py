"""
Nested spheres of fold values
=============================

When every singular-value component is a round sphere, the target graph is
determined by how the spheres nest. Each sphere becomes an edge from the
region outside it to the region inside it.
"""

from foldchi import Codim, NestingForest, Sphere, target_graph_from_forest, target_graph_from_round, total_euler
from foldchi.dot import emit_dot
from foldchi.roundfold import certify_graph_manifold

# Concentric 2-spheres in R^3, outermost first.
g = target_graph_from_round(Codim(5, 3), ["min+", "max+"])
print(sorted(g.vertices.items()))
print("chi(N^5) =", total_euler(g))

# Two circles side by side inside a third. The region between them is a
# disk with two holes, chi = -1.
forest = NestingForest(
    [
        Sphere("outer", "min+"),
        Sphere("left", "max+", parent="outer"),
        Sphere("right", "max+", parent="outer"),
    ]
)
h = target_graph_from_forest(Codim(4, 2), forest)
print("region between:", h.vertices["outer"])
print("chi(N^4) =", total_euler(h))
print(emit_dot(h))

# For a 3-manifold mapped to the plane with round folds on its boundary,
# three yes/no inputs decide whether it is certified as a graph manifold.
print(certify_graph_manifold(True, True, True))
print(certify_graph_manifold(True, False, True))
