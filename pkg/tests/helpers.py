"""Small builders shared by the test modules."""

from foldchi.foldcore import make_graph


def path_graph(n, k, labels, chi_sing=0, chi_regions=None):
    m = len(labels)
    regions = chi_regions if chi_regions is not None else [0] * (m + 1)
    vertices = {f"v{i}": regions[i] for i in range(m + 1)}
    edges = [(f"v{i}", f"v{i + 1}", lab, chi_sing) for i, lab in enumerate(labels)]
    return make_graph(n, k, vertices, "v0", edges)


def d4_graph():
    # projection D^4 -> R^2, folds along an equatorial circle
    return make_graph(4, 2, {"v0": 0, "v1": 1}, "v0", [("v0", "v1", "min+", 0)])
