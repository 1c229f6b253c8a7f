"""Exact dynamic counting of triangles and connected four-vertex subgraphs.

The engine keeps global, per-edge, per-vertex, and per-anchor pattern counts
correct under edge insertions and deletions, balancing work through a
degree-threshold partition with resizable capacity. A brute-force oracle and
matrix-product reduction gadgets round out the package for verification and
adversarial stream generation.
"""

from .anchored import SCounterState, anchored_delta, s_on_update
from .engine import DEFAULT_EPSILON, CountingEngine, EngineConfig
from .errors import (
    InconsistentState,
    InvalidConfig,
    InvalidEdge,
    NegativeResult,
    OracleMismatch,
    ParseError,
    PatternDisabled,
    QuadcountError,
    SizeLimit,
    TableDisabled,
    UnsupportedProblem,
)
from .gadgets import (
    BoolMatrix,
    GadgetSpec,
    ReductionRun,
    build_G,
    build_H,
    run_reduction,
)
from .graph import Edge, Graph, VertexId, edge_key
from .oracle import (
    OracleResult,
    count_cycles,
    find_cycle,
    multiplicity,
    oracle_all_counts,
    oracle_count,
)
from .partition import (
    EpsilonPartition,
    HighToLow,
    LowToHigh,
    PartitionEvent,
    RebuildRequired,
)
from .patterns import (
    ALL_PATTERNS,
    C4,
    CLAW,
    DIAMOND,
    FOUR_VERTEX_PATTERNS,
    K4,
    PATH3,
    PAW,
    TRIANGLE,
    PatternCounts,
    induced_from_subgraph,
    subgraph_from_induced,
)
from .queries import (
    claw_edge_query,
    claw_total,
    clique4_edge_scan,
    cycle4_edge_query,
    diamond_edge_query,
    path3_edge_query,
    paw_edge_query,
    triangle_edge_query,
    triangle_vertex_query,
)
from .tables import AuxStore, PairKey, TripleKey, pair_key, triple_key
from .cli import UpdateEvent, emit_gadget, main, parse_line, run_stream

__version__ = "0.1.0"

__all__ = [
    "ALL_PATTERNS",
    "AuxStore",
    "BoolMatrix",
    "C4",
    "CLAW",
    "CountingEngine",
    "DEFAULT_EPSILON",
    "DIAMOND",
    "Edge",
    "EngineConfig",
    "EpsilonPartition",
    "FOUR_VERTEX_PATTERNS",
    "GadgetSpec",
    "Graph",
    "HighToLow",
    "InconsistentState",
    "InvalidConfig",
    "InvalidEdge",
    "K4",
    "LowToHigh",
    "NegativeResult",
    "OracleMismatch",
    "OracleResult",
    "ParseError",
    "PartitionEvent",
    "PATH3",
    "PatternCounts",
    "PatternDisabled",
    "PAW",
    "PairKey",
    "QuadcountError",
    "RebuildRequired",
    "ReductionRun",
    "SCounterState",
    "SizeLimit",
    "TableDisabled",
    "TRIANGLE",
    "TripleKey",
    "UnsupportedProblem",
    "UpdateEvent",
    "VertexId",
    "anchored_delta",
    "build_G",
    "build_H",
    "claw_edge_query",
    "claw_total",
    "clique4_edge_scan",
    "count_cycles",
    "cycle4_edge_query",
    "diamond_edge_query",
    "edge_key",
    "emit_gadget",
    "find_cycle",
    "induced_from_subgraph",
    "main",
    "multiplicity",
    "oracle_all_counts",
    "oracle_count",
    "pair_key",
    "parse_line",
    "path3_edge_query",
    "paw_edge_query",
    "run_reduction",
    "run_stream",
    "s_on_update",
    "subgraph_from_induced",
    "triangle_edge_query",
    "triangle_vertex_query",
    "triple_key",
]
