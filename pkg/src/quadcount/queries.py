"""Per-edge and per-vertex pattern counts.

Every function here answers "how many occurrences of the pattern use this
edge (or vertex)" against the current graph, reading the partition and an
AuxStore that carries the tables the pattern needs. High neighborhoods are
never iterated; whenever a count involves a High vertex it comes from a
table or from a scan over the (small) High set itself.

All queries assume the edge {u, v} is present. They are exact and callable
between any two updates; the counting engine also uses them as update deltas
since the number of occurrences created by inserting an edge equals the
number using it right after the insertion (and symmetrically for deletions).
"""

from __future__ import annotations

from .graph import Graph, VertexId
from .partition import EpsilonPartition
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


def _choose2(k: int) -> int:
    return k * (k - 1) // 2 if k > 1 else 0


def high_common_count(graph, partition, u, v) -> int:
    """Number of High vertices adjacent to both u and v."""
    count = 0
    for h in partition.high_vertices():
        if h != u and h != v and graph.has_edge(h, u) and graph.has_edge(h, v):
            count += 1
    return count


def triangle_edge_query(
    graph: Graph, partition: EpsilonPartition, store: AuxStore, u: VertexId, v: VertexId
) -> int:
    """Triangles containing edge {u, v} = common neighbors of u and v."""
    return store.get(COMMON_LOW, pair_key(u, v)) + high_common_count(
        graph, partition, u, v
    )


def triangle_vertex_query(
    graph: Graph, partition: EpsilonPartition, store: AuxStore, v: VertexId
) -> int:
    """Triangles containing vertex v."""
    if partition.is_high(v):
        return store.get(TRIANGLES_HIGH, v)
    nbrs = sorted(graph.neighbors(v))
    count = 0
    for i, x in enumerate(nbrs):
        for y in nbrs[i + 1 :]:
            if graph.has_edge(x, y):
                count += 1
    return count


def claw_total(graph: Graph) -> int:
    """Stars K_{1,3}: each vertex contributes (deg choose 3), scanned fresh."""
    total = 0
    for v in graph.vertices():
        d = graph.degree(v)
        if d >= 3:
            total += d * (d - 1) * (d - 2) // 6
    return total


def claw_edge_query(graph: Graph, u: VertexId, v: VertexId) -> int:
    """Claws containing edge {u, v}: centered at u or at v."""
    return _choose2(graph.degree(u) - 1) + _choose2(graph.degree(v) - 1)


def _end_segment_paths(graph, partition, store, a, b) -> int:
    # 3-paths a-b-x-y, i.e. {a, b} is the path's first edge and the interior
    # continues through b's other neighbors x.
    total = store.get(WEDGES_LOW, b)
    if not partition.is_high(a):
        total -= graph.degree(a) - 1
    total -= store.get(COMMON_LOW, pair_key(a, b))
    for h in partition.high_vertices():
        if h != a and graph.has_edge(h, b):
            total += graph.degree(h) - 1
            if graph.has_edge(h, a):
                total -= 1
    return total


def path3_edge_query(
    graph: Graph, partition: EpsilonPartition, store: AuxStore, u: VertexId, v: VertexId
) -> int:
    """3-edge paths containing edge {u, v}, in any position."""
    central = (graph.degree(u) - 1) * (graph.degree(v) - 1) - triangle_edge_query(
        graph, partition, store, u, v
    )
    return (
        central
        + _end_segment_paths(graph, partition, store, u, v)
        + _end_segment_paths(graph, partition, store, v, u)
    )


def paw_edge_query(
    graph: Graph, partition: EpsilonPartition, store: AuxStore, u: VertexId, v: VertexId
) -> int:
    """Paws containing edge {u, v}: as the arm, as a center-triangle edge, or
    as the triangle edge opposite the center."""
    shared = triangle_edge_query(graph, partition, store, u, v)
    arm = (
        triangle_vertex_query(graph, partition, store, u)
        + triangle_vertex_query(graph, partition, store, v)
        - 2 * shared
    )
    central = shared * (graph.degree(u) - 2 + graph.degree(v) - 2)
    opposite = store.get(CLAW_CENTER_LOW, pair_key(u, v))
    for h in partition.high_vertices():
        if h != u and h != v and graph.has_edge(h, u) and graph.has_edge(h, v):
            opposite += graph.degree(h) - 2
    return arm + central + opposite


def cycle4_edge_query(
    graph: Graph, partition: EpsilonPartition, store: AuxStore, u: VertexId, v: VertexId
) -> int:
    """4-cycles containing edge {u, v}: one per 3-path between u and v,
    split by the partition sides of the two interior vertices."""
    total = store.get(PATH3_LOW, pair_key(u, v))
    u_high = partition.is_high(u)
    v_high = partition.is_high(v)
    # exactly one High interior vertex, sitting next to v (resp. next to u)
    for h in partition.high_vertices():
        if h == u or h == v:
            continue
        if graph.has_edge(h, v):
            total += store.get(COMMON_LOW, pair_key(u, h))
            if not v_high:
                total -= 1
        if graph.has_edge(h, u):
            total += store.get(COMMON_LOW, pair_key(v, h))
            if not u_high:
                total -= 1
    # both interior vertices High
    if u_high:
        for h in partition.high_vertices():
            if h != u and h != v and graph.has_edge(h, v):
                total += store.get(COMMON_HIGH, pair_key(u, h))
                if v_high:
                    total -= 1
    elif v_high:
        for h in partition.high_vertices():
            if h != u and h != v and graph.has_edge(h, u):
                total += store.get(COMMON_HIGH, pair_key(v, h))
    else:
        for x in graph.neighbors(u):
            if x == v or not partition.is_high(x):
                continue
            for y in graph.neighbors(v):
                if y == u or y == x or not partition.is_high(y):
                    continue
                if graph.has_edge(x, y):
                    total += 1
    return total


def diamond_edge_query(
    graph: Graph, partition: EpsilonPartition, store: AuxStore, u: VertexId, v: VertexId
) -> int:
    """Diamonds containing edge {u, v}, either as the chord or as one of the
    four cycle edges."""
    shared = triangle_edge_query(graph, partition, store, u, v)
    total = _choose2(shared)

    # cycle edge, with the other chord endpoint and the fourth vertex Low
    total += store.get(PAW_LOW, pair_key(u, v))

    u_high = partition.is_high(u)
    v_high = partition.is_high(v)
    for h in partition.high_vertices():
        if h == u or h == v:
            continue
        hu = graph.has_edge(h, u)
        hv = graph.has_edge(h, v)
        if hu or hv:
            # cycle edge, Low chord partner, High fourth vertex h; h must
            # touch the chord endpoint inside {u, v}
            hub = store.get(LOW_TRIPLE_HUB, triple_key(u, v, h))
            if hub:
                total += hub * (int(hu) + int(hv))
        if hu and hv:
            # cycle edge, High chord partner h, High chord endpoint in the edge
            if u_high:
                total += (
                    store.get(COMMON_LOW, pair_key(u, h))
                    + store.get(COMMON_HIGH, pair_key(u, h))
                    - 1
                )
            if v_high:
                total += (
                    store.get(COMMON_LOW, pair_key(v, h))
                    + store.get(COMMON_HIGH, pair_key(v, h))
                    - 1
                )
    # cycle edge, High chord partner, Low chord endpoint in the edge
    if not u_high:
        for h in graph.neighbors(u):
            if h == v or not partition.is_high(h) or not graph.has_edge(h, v):
                continue
            for x in graph.neighbors(u):
                if x != v and x != h and graph.has_edge(x, h):
                    total += 1
    if not v_high:
        for h in graph.neighbors(v):
            if h == u or not partition.is_high(h) or not graph.has_edge(h, u):
                continue
            for x in graph.neighbors(v):
                if x != u and x != h and graph.has_edge(x, h):
                    total += 1
    return total


def clique4_edge_scan(graph: Graph, u: VertexId, v: VertexId) -> int:
    """4-cliques containing edge {u, v}: adjacent pairs among the common
    neighborhood, scanned from the smaller endpoint."""
    if graph.degree(u) > graph.degree(v):
        u, v = v, u
    commons = [w for w in graph.neighbors(u) if w != v and graph.has_edge(w, v)]
    total = 0
    for i, x in enumerate(commons):
        for y in commons[i + 1 :]:
            if graph.has_edge(x, y):
                total += 1
    return total
