"""Combinatorics of submersions with definite folds.

Euler characteristics from target graphs, diffeomorphism types for
functions to R, and attaching-matrix factorizations for plumbing graphs.
"""

from .errors import FoldError
from .eulercalc import (
    ExtensionVerdict,
    extension_obstruction,
    fiber_euler,
    fiber_euler_by_walk,
    simply_connected_mod2,
    total_euler,
    total_euler_mod2,
)
from .foldcore import (
    MAX_MINUS,
    MAX_PLUS,
    MIN_MINUS,
    MIN_PLUS,
    Codim,
    DepthCounts,
    Edge,
    FoldLabel,
    TargetGraph,
    ValidationReport,
    depth,
    make_graph,
    path_label_counts,
    validate_target_graph,
)
from .mfunctions import (
    CriticalSequence,
    diffeotype,
    euler_from_handles,
    generate_surface_mfunction,
    handle_decomposition,
    sphere_extension_exists,
    validate_sequence,
)
from .plumbing import (
    AttachingMatrix,
    Mat2Z,
    PlumbingGraph,
    build_plumbing_graph,
    compose_factors,
    factor_attaching,
)
from .roundfold import (
    NestingForest,
    Sphere,
    certify_graph_manifold,
    target_graph_from_forest,
    target_graph_from_round,
)

__version__ = "0.1.0"
