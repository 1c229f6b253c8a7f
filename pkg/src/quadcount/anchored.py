"""Counts restricted to occurrences containing one fixed anchor vertex.

For an anchor s the per-update delta is the number of occurrences that
contain both s and the updated edge. When the edge touches s this is exactly
the corresponding edge query; otherwise each pattern decomposes into a
handful of closed-form terms over degrees, common-neighbor counts, and the
triple-hub table, derived from the roles s can play in the pattern.

Anchored stores only keep pair/triple keys that contain s for the tables
where every read here includes s in the key; tables read with foreign keys
(for example common_low at {u, v}) stay unscoped. ANCHORED_TABLES records
that split per pattern.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph, VertexId
from .partition import EpsilonPartition
from .patterns import C4, CLAW, DIAMOND, K4, PATH3, PAW, TRIANGLE
from .queries import (
    claw_edge_query,
    clique4_edge_scan,
    cycle4_edge_query,
    diamond_edge_query,
    high_common_count,
    path3_edge_query,
    paw_edge_query,
    triangle_edge_query,
)
from .tables import (
    CLAW_CENTER_LOW,
    COMMON_HIGH,
    COMMON_LOW,
    LOW_TRIPLE_HUB,
    PATH3_LOW,
    PAW_LOW,
    TRIANGLES_HIGH,
    WEDGES_LOW,
    AuxStore,
    pair_key,
    triple_key,
)

# Per pattern: (tables kept in full, tables restricted to keys containing s).
ANCHORED_TABLES = {
    TRIANGLE: ((), (COMMON_LOW,)),
    PATH3: ((WEDGES_LOW,), (COMMON_LOW,)),
    CLAW: ((), ()),
    PAW: ((COMMON_LOW, TRIANGLES_HIGH), (CLAW_CENTER_LOW, LOW_TRIPLE_HUB)),
    C4: ((COMMON_LOW, PATH3_LOW, COMMON_HIGH), ()),
    DIAMOND: ((COMMON_LOW, COMMON_HIGH, PAW_LOW), (LOW_TRIPLE_HUB,)),
    K4: ((), ()),
}


@dataclass
class SCounterState:
    """Live totals of pattern occurrences containing the anchor."""

    anchor: VertexId
    totals: dict = field(default_factory=dict)


def _commons_excluding(graph, partition, store, a, b, excluded) -> int:
    """|N(a) & N(b)| without `excluded` (counted only if it qualifies)."""
    total = store.get(COMMON_LOW, pair_key(a, b)) + high_common_count(
        graph, partition, a, b
    )
    if (
        excluded != a
        and excluded != b
        and graph.has_edge(excluded, a)
        and graph.has_edge(excluded, b)
    ):
        total -= 1
    return total


def _triple_commons(graph, partition, store, u, v, s) -> int:
    """Vertices adjacent to all of u, v, s."""
    total = store.get(LOW_TRIPLE_HUB, triple_key(u, v, s))
    for h in partition.high_vertices():
        if (
            h != u
            and h != v
            and h != s
            and graph.has_edge(h, u)
            and graph.has_edge(h, v)
            and graph.has_edge(h, s)
        ):
            total += 1
    return total


def s_on_update(
    state: SCounterState,
    pattern: str,
    graph: Graph,
    partition: EpsilonPartition | None,
    store: AuxStore | None,
    u: VertexId,
    v: VertexId,
    sign: int,
) -> None:
    delta = anchored_delta(pattern, graph, partition, store, state.anchor, u, v)
    state.totals[pattern] = state.totals.get(pattern, 0) + sign * delta


def anchored_delta(
    pattern: str,
    graph: Graph,
    partition: EpsilonPartition | None,
    store: AuxStore | None,
    s: VertexId,
    u: VertexId,
    v: VertexId,
) -> int:
    """Occurrences of `pattern` containing both vertex s and edge {u, v};
    the edge must be present in the graph."""
    if s == u or s == v:
        x = v if s == u else u
        if pattern == TRIANGLE:
            return triangle_edge_query(graph, partition, store, s, x)
        if pattern == PATH3:
            return path3_edge_query(graph, partition, store, s, x)
        if pattern == CLAW:
            return claw_edge_query(graph, s, x)
        if pattern == PAW:
            return paw_edge_query(graph, partition, store, s, x)
        if pattern == C4:
            return cycle4_edge_query(graph, partition, store, s, x)
        if pattern == DIAMOND:
            return diamond_edge_query(graph, partition, store, s, x)
        if pattern == K4:
            return clique4_edge_scan(graph, s, x)
        raise AssertionError(pattern)

    su = graph.has_edge(s, u)
    sv = graph.has_edge(s, v)

    if pattern == TRIANGLE:
        return 1 if su and sv else 0

    if pattern == CLAW:
        total = 0
        if su:
            total += graph.degree(u) - 2
        if sv:
            total += graph.degree(v) - 2
        return total

    if pattern == PATH3:
        total = 0
        ds = graph.degree(s)
        if su:
            # s-u-v-y, plus v-u-s-d with the far end at s's side
            total += graph.degree(v) - 1 - (1 if sv else 0)
            total += ds - 1 - (1 if sv else 0)
        if sv:
            total += graph.degree(u) - 1 - (1 if su else 0)
            total += ds - 1 - (1 if su else 0)
        # u-v-c-s and v-u-c-s through a common neighbor c of s and an endpoint
        total += _commons_excluding(graph, partition, store, v, s, u)
        total += _commons_excluding(graph, partition, store, u, s, v)
        return total

    if pattern == PAW:
        both = 1 if su and sv else 0
        either = int(su) + int(sv)
        total = 0
        if su:
            # {u, v} is the arm, s in the triangle at u
            total += _commons_excluding(graph, partition, store, u, s, v)
        if sv:
            total += _commons_excluding(graph, partition, store, v, s, u)
        shared = triangle_edge_query(graph, partition, store, u, v)
        # {u, v} between center and triangle: s as the third triangle vertex,
        # then s as the arm end
        total += both * (graph.degree(u) - 2 + graph.degree(v) - 2)
        total += either * (shared - both)
        # {u, v} opposite the center: s as the center, s as the arm end
        if both:
            total += graph.degree(s) - 2
        total += _triple_commons(graph, partition, store, u, v, s)
        return total

    if pattern == C4:
        total = 0
        if su:
            total += _commons_excluding(graph, partition, store, v, s, u)
        if sv:
            total += _commons_excluding(graph, partition, store, u, s, v)
        return total

    if pattern == DIAMOND:
        both = su and sv
        either = int(su) + int(sv)
        total = 0
        if both:
            shared = triangle_edge_query(graph, partition, store, u, v)
            # {u, v} as the chord, s one of the two cycle vertices
            total += shared - 1
            # {u, v} a cycle edge, s the other chord endpoint
            total += _commons_excluding(graph, partition, store, u, s, v)
            total += _commons_excluding(graph, partition, store, v, s, u)
        # {u, v} a cycle edge, s the off-chord vertex
        total += either * _triple_commons(graph, partition, store, u, v, s)
        return total

    if pattern == K4:
        if not (su and sv):
            return 0
        a, b = (u, v) if graph.degree(u) <= graph.degree(v) else (v, u)
        total = 0
        for y in graph.neighbors(a):
            if y != b and y != s and graph.has_edge(y, b) and graph.has_edge(y, s):
                total += 1
        return total

    raise AssertionError(pattern)
