"""Shared test utilities: small graph builders and definitional (slow, loop
based) recomputations of the auxiliary tables. These deliberately do not call
the library's incremental maintenance code; they re-derive everything from
the graph so the incremental path has an independent reference."""

from itertools import combinations
import random

from quadcount.graph import Graph
from quadcount.tables import (
    CLAW_CENTER_LOW,
    COMMON_HIGH,
    COMMON_LOW,
    LOW_TRIPLE_HUB,
    PATH3_LOW,
    PAW_LOW,
    TRIANGLES_HIGH,
    WEDGES_LOW,
)


def graph_from_edges(edges, vertices=()):
    g = Graph()
    for v in vertices:
        g.ensure_vertex(v)
    for u, v in edges:
        g.insert_edge(u, v)
    return g


def complete_graph(n):
    return graph_from_edges(combinations(range(n), 2))


def star(leaves):
    return graph_from_edges((0, i) for i in range(1, leaves + 1))


def cycle_graph(n):
    return graph_from_edges((i, (i + 1) % n) for i in range(n))


def path_graph(n):
    return graph_from_edges((i, i + 1) for i in range(n - 1))


def diamond_graph():
    # 4-cycle 0-2-1-3 plus the chord {0, 1}.
    return graph_from_edges([(0, 2), (2, 1), (1, 3), (3, 0), (0, 1)])


def paw_graph():
    # triangle {0, 1, 2} with the arm {0, 3}.
    return graph_from_edges([(0, 1), (0, 2), (1, 2), (0, 3)])


def random_edge_stream(n, steps, seed, insert_bias=0.5):
    """Mixed insert/delete stream over vertex ids 0..n-1. Yields ('+'|'-', u, v);
    deletes only edges currently present, inserts only absent ones."""
    rng = random.Random(seed)
    present = set()
    pairs = list(combinations(range(n), 2))
    out = []
    for _ in range(steps):
        if present and (rng.random() > insert_bias or len(present) == len(pairs)):
            e = rng.choice(sorted(present))
            present.remove(e)
            out.append(("-", e[0], e[1]))
        else:
            absent = [p for p in pairs if p not in present]
            if not absent:
                continue
            e = rng.choice(absent)
            present.add(e)
            out.append(("+", e[0], e[1]))
    return out


# -- definitional table recomputation ---------------------------------------


def _is_low(partition, v):
    return not partition.is_high(v)


def reference_tables(graph, partition):
    """All eight auxiliary tables recomputed from scratch by definition.

    Returns {table_name: {key: value}} with zero entries absent, matching
    the sparse storage contract.
    """
    low = [v for v in graph.vertices() if _is_low(partition, v)]
    high = [v for v in graph.vertices() if partition.is_high(v)]
    tables = {
        WEDGES_LOW: {},
        TRIANGLES_HIGH: {},
        COMMON_LOW: {},
        COMMON_HIGH: {},
        PATH3_LOW: {},
        CLAW_CENTER_LOW: {},
        PAW_LOW: {},
        LOW_TRIPLE_HUB: {},
    }

    def bump(table, key, amount=1):
        if amount:
            tables[table][key] = tables[table].get(key, 0) + amount

    def pair(a, b):
        return (a, b) if a < b else (b, a)

    # wedges with a Low midpoint, keyed by an endpoint
    for v in graph.vertices():
        total = 0
        for mid in graph.neighbors(v):
            if _is_low(partition, mid):
                total += graph.degree(mid) - 1
        if total:
            tables[WEDGES_LOW][v] = total

    # triangles through each High vertex
    for h in high:
        nbrs = sorted(graph.neighbors(h))
        count = sum(
            1 for a, b in combinations(nbrs, 2) if graph.has_edge(a, b)
        )
        if count:
            tables[TRIANGLES_HIGH][h] = count

    # common Low / common High neighbors per pair
    for u, v in combinations(sorted(graph.vertices()), 2):
        cl = sum(
            1
            for x in graph.neighbors(u)
            if x != v and _is_low(partition, x) and graph.has_edge(x, v)
        )
        bump(COMMON_LOW, pair(u, v), cl)
        if partition.is_high(u) and partition.is_high(v):
            ch = sum(
                1
                for x in graph.neighbors(u)
                if x != v and partition.is_high(x) and graph.has_edge(x, v)
            )
            bump(COMMON_HIGH, pair(u, v), ch)

    # 3-paths u-x-y-v with both interior vertices Low
    for x in low:
        for y in graph.neighbors(x):
            if y not in low or y <= x:
                continue
            for u in graph.neighbors(x):
                if u == y:
                    continue
                for v in graph.neighbors(y):
                    if v == x or v == u:
                        continue
                    bump(PATH3_LOW, pair(u, v))

    # claws with a Low center, keyed by two of the three leaves
    for c in low:
        nbrs = sorted(graph.neighbors(c))
        for a, b, d in combinations(nbrs, 3):
            bump(CLAW_CENTER_LOW, pair(a, b))
            bump(CLAW_CENTER_LOW, pair(a, d))
            bump(CLAW_CENTER_LOW, pair(b, d))

    # paws with a Low center c (the triangle vertex carrying the pendant
    # arm to w), keyed by {w, y} for a non-center triangle vertex y, where
    # the remaining triangle vertex must also be Low
    for c in low:
        nbrs = sorted(graph.neighbors(c))
        for x, y in combinations(nbrs, 2):
            if not graph.has_edge(x, y):
                continue
            for w in nbrs:
                if w == x or w == y:
                    continue
                if _is_low(partition, y):
                    bump(PAW_LOW, pair(w, x))
                if _is_low(partition, x):
                    bump(PAW_LOW, pair(w, y))

    # Low vertices adjacent to all three of a triple
    for c in low:
        nbrs = sorted(graph.neighbors(c))
        for a, b, d in combinations(nbrs, 3):
            bump(LOW_TRIPLE_HUB, (a, b, d))

    return tables
