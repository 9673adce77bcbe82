"""Exact and simulated hitting times of random walks on finite undirected graphs."""

from .families import (
    CompleteDaryTree, Cycle, FamilyParameterError, Grid, Hypercube, Path, Star, Tadpole,
    TreeFromParents, generate,
)
from .graph import (
    DuplicateEdgeError, Graph, GraphError, GraphParseError, SelfLoopError, VertexRangeError,
    build_graph, component_of, is_connected, parse_graph, serialize_graph,
)
from .montecarlo import WalkConfig, WalkEstimate, simulate_hitting_time, simulate_return_time
from .solver import (
    UNREACHABLE, Backend, HittingVector, all_pairs, expected_return_time, hitting_time,
    hitting_times_to,
)

__version__ = "0.1.0"
