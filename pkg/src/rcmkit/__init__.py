"""rcmkit: sparse matrix reordering toolkit.

Reverse Cuthill-McKee pipelines with pluggable starting-node finders
(minimum degree, George-Liu, and a bi-criteria finder that also weighs
level-structure width), bandwidth/profile metrics, an envelope Cholesky
solver, and a corpus benchmark harness.
"""

from .envelope import EnvelopeFactor, NotPositiveDefiniteError, envelope_cholesky, solve
from .finders import FinderTrace, StartPolicy, bnf_find, gl_find, mind_find, resolve_start
from .graph import (AdjacencyGraph, ComponentSet, LevelStructure,
                    bfs_level_structure, build_graph, connected_components)
from .matrix_io import (MatrixFormatError, SparseSymMatrix, from_coordinates,
                        parse_matrix_market, read_matrix_market_file,
                        write_matrix_market, write_matrix_market_file)
from .metrics import (SeriesPoint, bandwidth, bandwidth_under, exponential_smoothing,
                      profile, profile_under, proportion_optimal, relative_difference)
from .reorder import (Permutation, ReorderReport, apply_permutation, cuthill_mckee,
                      rcm_pipeline, reverse)

__version__ = "0.1.0"

__all__ = [
    "AdjacencyGraph", "ComponentSet", "EnvelopeFactor", "FinderTrace",
    "LevelStructure", "MatrixFormatError", "NotPositiveDefiniteError",
    "Permutation", "ReorderReport", "SeriesPoint", "SparseSymMatrix",
    "StartPolicy", "apply_permutation", "bandwidth", "bandwidth_under",
    "bfs_level_structure", "bnf_find", "build_graph", "connected_components",
    "cuthill_mckee", "envelope_cholesky", "exponential_smoothing",
    "from_coordinates", "gl_find", "mind_find", "parse_matrix_market",
    "profile", "profile_under", "proportion_optimal", "rcm_pipeline",
    "read_matrix_market_file", "relative_difference", "resolve_start",
    "reverse", "solve", "write_matrix_market", "write_matrix_market_file",
]
