"""Interval edge colorings of ring-layered regular graphs.

The package builds the 2n-regular family of k complete-bipartite-joined
layers on a ring (and K_{n,n}), produces explicit interval edge colorings,
verifies the interval property for arbitrary colorings, and brute-forces
exact least/greatest spans and chromatic indices on desk-scale instances.
"""

from .coloring import EdgeColoring, Spectrum, VerificationReport, spectrum, used_colors, verify
from .construct import (
    BoundsSummary,
    bounds_summary,
    expected_spectrum,
    mirrored_staircase_coloring,
    ring_chromatic_index,
    staircase_coloring,
    t_coloring,
    widest_constructed_t,
)
from .errors import (
    BudgetExhaustedError,
    ColorRangeError,
    ColoringError,
    ColoringMismatchError,
    FormatError,
    IncompleteColoringError,
    ParameterError,
    ParityError,
    RingcolError,
)
from .graphs import (
    Edge,
    Graph,
    RingParams,
    Vertex,
    build_graph,
    complete_bipartite,
    make_edge,
    ring_graph,
)
from .search import (
    BoundReport,
    SearchConfig,
    SearchOutcome,
    compute_W,
    compute_chromatic_index,
    compute_w,
    continuity_scan,
    find_interval_t,
    find_proper_t,
)

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "BoundsSummary",
    "BudgetExhaustedError",
    "ColorRangeError",
    "ColoringError",
    "ColoringMismatchError",
    "Edge",
    "EdgeColoring",
    "FormatError",
    "Graph",
    "IncompleteColoringError",
    "ParameterError",
    "ParityError",
    "RingParams",
    "RingcolError",
    "SearchConfig",
    "SearchOutcome",
    "Spectrum",
    "VerificationReport",
    "Vertex",
    "bounds_summary",
    "build_graph",
    "complete_bipartite",
    "compute_W",
    "compute_chromatic_index",
    "compute_w",
    "continuity_scan",
    "expected_spectrum",
    "find_interval_t",
    "find_proper_t",
    "make_edge",
    "mirrored_staircase_coloring",
    "ring_chromatic_index",
    "ring_graph",
    "spectrum",
    "staircase_coloring",
    "t_coloring",
    "used_colors",
    "verify",
    "widest_constructed_t",
]
