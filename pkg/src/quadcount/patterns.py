"""Pattern catalogue: the triangle plus every connected 4-vertex graph.

Patterns are identified by short string tokens throughout the package
(CLI, engine, oracle):

    triangle  K3
    path3     path on 4 vertices (3 edges)
    claw      star K_{1,3}
    paw       triangle with a pendant edge
    c4        4-cycle
    diamond   K4 minus one edge
    k4        K4

A "count" of P in G always means the number of distinct subgraphs of G
isomorphic to P, i.e. occurrences are identified by their vertex+edge set,
never by labelled embeddings.
"""

from __future__ import annotations

from typing import Dict

from .errors import InvalidConfig, NegativeResult

# Pattern tokens are plain strings; a counts mapping is pattern -> total.
Pattern = str
PatternCounts = Dict[str, int]

TRIANGLE = "triangle"
PATH3 = "path3"
CLAW = "claw"
PAW = "paw"
C4 = "c4"
DIAMOND = "diamond"
K4 = "k4"

# The six 4-vertex patterns in fixed edge-count order (ties broken path3 < claw).
FOUR_VERTEX_PATTERNS = (PATH3, CLAW, PAW, C4, DIAMOND, K4)
ALL_PATTERNS = (TRIANGLE,) + FOUR_VERTEX_PATTERNS

# Canonical edge sets on vertex labels 0..k-1.
PATTERN_EDGES = {
    TRIANGLE: ((0, 1), (0, 2), (1, 2)),
    PATH3: ((0, 1), (1, 2), (2, 3)),
    CLAW: ((0, 1), (0, 2), (0, 3)),
    PAW: ((0, 1), (0, 2), (1, 2), (0, 3)),
    C4: ((0, 1), (1, 2), (2, 3), (0, 3)),
    DIAMOND: ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3)),
    K4: ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)),
}

PATTERN_VERTICES = {p: (3 if p == TRIANGLE else 4) for p in ALL_PATTERNS}

# |Aut(P)|, used to deduplicate labelled embeddings.
AUTOMORPHISMS = {
    TRIANGLE: 6,
    PATH3: 2,
    CLAW: 6,
    PAW: 2,
    C4: 8,
    DIAMOND: 4,
    K4: 24,
}

# Edges per occurrence: summing an edge-local count over all edges of G gives
# EDGE_COUNT[p] * total.
EDGE_COUNT = {p: len(PATTERN_EDGES[p]) for p in ALL_PATTERNS}

# Occurrences of the column pattern inside the row pattern, both taken as
# plain graphs. Only rows with at least as many edges as the column are
# nonzero off the diagonal. The oracle recomputes this table from the edge
# sets above; these literals are the reference the engine-side conversions
# trust.
MULTIPLICITY = {
    PATH3: {PATH3: 1, CLAW: 0, PAW: 0, C4: 0, DIAMOND: 0, K4: 0},
    CLAW: {PATH3: 0, CLAW: 1, PAW: 0, C4: 0, DIAMOND: 0, K4: 0},
    PAW: {PATH3: 2, CLAW: 1, PAW: 1, C4: 0, DIAMOND: 0, K4: 0},
    C4: {PATH3: 4, CLAW: 0, PAW: 0, C4: 1, DIAMOND: 0, K4: 0},
    DIAMOND: {PATH3: 6, CLAW: 2, PAW: 4, C4: 1, DIAMOND: 1, K4: 0},
    K4: {PATH3: 12, CLAW: 4, PAW: 12, C4: 3, DIAMOND: 6, K4: 1},
}


def check_pattern(pattern: str, allow_triangle: bool = True) -> str:
    if pattern in FOUR_VERTEX_PATTERNS or (allow_triangle and pattern == TRIANGLE):
        return pattern
    raise InvalidConfig(f"unknown pattern {pattern!r}")


def multiplicity(outer: str, inner: str) -> int:
    """Occurrences of `inner` as a subgraph of the pattern graph `outer`."""
    check_pattern(outer, allow_triangle=False)
    check_pattern(inner, allow_triangle=False)
    return MULTIPLICITY[outer][inner]


def induced_from_subgraph(counts: dict) -> dict:
    """Convert non-induced 4-vertex totals to induced totals.

    Works because the pattern containment order is triangular: K4 pins its
    own induced count and each denser pattern's surplus is subtracted from
    the sparser rows. A triangle count, if supplied, passes through
    unchanged (a triangle has no non-edges). Raises NegativeResult if the
    input was not a consistent family of subgraph counts.
    """
    for p in FOUR_VERTEX_PATTERNS:
        if p not in counts:
            raise InvalidConfig(f"missing count for {p}")
    ind = {}
    if TRIANGLE in counts:
        ind[TRIANGLE] = counts[TRIANGLE]
    ind[PATH3] = (
        counts[PATH3]
        - 2 * counts[PAW]
        - 4 * counts[C4]
        + 6 * counts[DIAMOND]
        - 12 * counts[K4]
    )
    ind[CLAW] = counts[CLAW] - counts[PAW] + 2 * counts[DIAMOND] - 4 * counts[K4]
    ind[PAW] = counts[PAW] - 4 * counts[DIAMOND] + 12 * counts[K4]
    ind[C4] = counts[C4] - counts[DIAMOND] + 3 * counts[K4]
    ind[DIAMOND] = counts[DIAMOND] - 6 * counts[K4]
    ind[K4] = counts[K4]
    for p, value in ind.items():
        if value < 0:
            raise NegativeResult(f"induced count for {p} came out {value}")
    return ind


def subgraph_from_induced(induced: dict) -> dict:
    """Inverse direction: non-induced totals as multiplicity-weighted sums
    of induced totals over all denser patterns. A triangle count, if
    supplied, passes through unchanged, mirroring induced_from_subgraph."""
    out = {}
    if TRIANGLE in induced:
        out[TRIANGLE] = induced[TRIANGLE]
    for target in FOUR_VERTEX_PATTERNS:
        total = 0
        for p in FOUR_VERTEX_PATTERNS:
            total += induced[p] * MULTIPLICITY[p][target]
        out[target] = total
    return out
