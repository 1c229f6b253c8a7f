"""Brute-force subgraph counting by subset enumeration.

This module is the ground truth the dynamic engine is tested against, so it
shares no counting logic with the engine: every 3- or 4-vertex subset is
classified through its adjacency bitmask and a table built from the pattern
edge sets by direct enumeration of labelled embeddings.

Vectorized with numpy; a graph on n vertices costs O(C(n, 4)) regardless of
structure, fine for the n <= ~16 graphs the tests use and capped by
max_vertices (SizeLimit) beyond that.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

import numpy as np

from .errors import InvalidConfig, SizeLimit
from .graph import Graph, VertexId
from .patterns import (
    ALL_PATTERNS,
    FOUR_VERTEX_PATTERNS,
    PATTERN_EDGES,
    TRIANGLE,
    check_pattern,
)

_Adjacency = np.ndarray

DEFAULT_MAX_VERTICES = 64

# Slot order for the 6 vertex pairs inside a sorted 4-subset; bit s of a
# subset's mask says whether pair PAIR_SLOTS[s] is an edge.
PAIR_SLOTS = tuple(combinations(range(4), 2))


def _embedding_images(mask_edges: frozenset, pattern_edges) -> set:
    """Distinct edge-set images of the pattern under all vertex bijections of
    {0,1,2,3} whose edge image lands inside mask_edges."""
    images = set()
    for perm in permutations(range(4)):
        img = []
        ok = True
        for a, b in pattern_edges:
            pa, pb = perm[a], perm[b]
            e = (pa, pb) if pa < pb else (pb, pa)
            if e not in mask_edges:
                ok = False
                break
            img.append(e)
        if ok:
            images.add(frozenset(img))
    return images


def _build_tables():
    sub = np.zeros((64, 6), dtype=np.int64)
    ind = np.zeros((64, 6), dtype=np.int64)
    edge = np.zeros((64, 6, 6), dtype=np.int64)
    for mask in range(64):
        mask_edges = frozenset(
            PAIR_SLOTS[s] for s in range(6) if (mask >> s) & 1
        )
        for pi, pattern in enumerate(FOUR_VERTEX_PATTERNS):
            images = _embedding_images(mask_edges, PATTERN_EDGES[pattern])
            sub[mask, pi] = len(images)
            if mask_edges in images:
                ind[mask, pi] = 1
            for slot in range(6):
                pair = PAIR_SLOTS[slot]
                edge[mask, slot, pi] = sum(1 for img in images if pair in img)
    return sub, ind, edge


_SUB_TABLE, _IND_TABLE, _EDGE_TABLE = _build_tables()
_PATTERN_INDEX = {p: i for i, p in enumerate(FOUR_VERTEX_PATTERNS)}

# Which slot a (position, position) pair inside a sorted subset maps to.
_SLOT_OF = np.full((4, 4), -1, dtype=np.int64)
for _s, (_a, _b) in enumerate(PAIR_SLOTS):
    _SLOT_OF[_a, _b] = _SLOT_OF[_b, _a] = _s

_subset_cache: dict = {}


def _subsets(n: int, k: int) -> np.ndarray:
    key = (n, k)
    if key not in _subset_cache:
        combos = list(combinations(range(n), k))
        _subset_cache[key] = np.array(combos, dtype=np.int64).reshape(len(combos), k)
    return _subset_cache[key]


def adjacency_matrix(graph: Graph) -> tuple[_Adjacency, dict]:
    """Dense boolean adjacency over sorted vertex ids, plus the id -> row map."""
    ids = sorted(graph.vertices())
    index = {v: i for i, v in enumerate(ids)}
    n = len(ids)
    a = np.zeros((n, n), dtype=bool)
    for u, v in graph.edges():
        a[index[u], index[v]] = True
        a[index[v], index[u]] = True
    return a, index


def _masks4(a: _Adjacency, rows: np.ndarray) -> np.ndarray:
    masks = np.zeros(len(rows), dtype=np.int64)
    for s, (i, j) in enumerate(PAIR_SLOTS):
        masks |= a[rows[:, i], rows[:, j]].astype(np.int64) << s
    return masks


@dataclass
class OracleResult:
    subgraph: dict
    induced: dict


def oracle_all_counts(
    graph: Graph,
    vertex: VertexId | None = None,
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> OracleResult:
    """Every pattern total in one pass: non-induced and induced, optionally
    restricted to occurrences containing `vertex`."""
    a, index = adjacency_matrix(graph)
    n = a.shape[0]
    if n > max_vertices:
        raise SizeLimit(f"{n} vertices exceeds cap {max_vertices}")
    subgraph = {p: 0 for p in ALL_PATTERNS}
    induced = {p: 0 for p in ALL_PATTERNS}
    if vertex is not None and vertex not in index:
        return OracleResult(subgraph, induced)

    if n >= 3:
        rows = _subsets(n, 3)
        if vertex is not None:
            rows = rows[(rows == index[vertex]).any(axis=1)]
        if len(rows):
            full = (
                a[rows[:, 0], rows[:, 1]]
                & a[rows[:, 0], rows[:, 2]]
                & a[rows[:, 1], rows[:, 2]]
            )
            tri = int(full.sum())
            subgraph[TRIANGLE] = tri
            induced[TRIANGLE] = tri

    if n >= 4:
        rows = _subsets(n, 4)
        if vertex is not None:
            rows = rows[(rows == index[vertex]).any(axis=1)]
        if len(rows):
            hist = np.bincount(_masks4(a, rows), minlength=64)
            subs = hist @ _SUB_TABLE
            inds = hist @ _IND_TABLE
            for p, i in _PATTERN_INDEX.items():
                subgraph[p] = int(subs[i])
                induced[p] = int(inds[i])
    return OracleResult(subgraph, induced)


def oracle_count(
    graph: Graph,
    pattern: str,
    induced: bool = False,
    vertex: VertexId | None = None,
    edge=None,
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> int:
    """Count one pattern, optionally induced, optionally only occurrences
    containing a given vertex or using a given edge."""
    check_pattern(pattern)
    if edge is not None:
        if vertex is not None:
            raise InvalidConfig("vertex and edge filters are mutually exclusive")
        return _count_with_edge(graph, pattern, induced, edge, max_vertices)
    result = oracle_all_counts(graph, vertex=vertex, max_vertices=max_vertices)
    return (result.induced if induced else result.subgraph)[pattern]


def _count_with_edge(graph, pattern, induced, edge, max_vertices) -> int:
    a, index = adjacency_matrix(graph)
    n = a.shape[0]
    if n > max_vertices:
        raise SizeLimit(f"{n} vertices exceeds cap {max_vertices}")
    u, v = edge
    if u not in index or v not in index or not a[index[u], index[v]]:
        return 0
    ui, vi = index[u], index[v]

    if pattern == TRIANGLE:
        return int((a[ui] & a[vi]).sum())

    if n < 4:
        return 0
    rows = _subsets(n, 4)
    rows = rows[(rows == ui).any(axis=1) & (rows == vi).any(axis=1)]
    if not len(rows):
        return 0
    masks = _masks4(a, rows)
    pu = np.argmax(rows == ui, axis=1)
    pv = np.argmax(rows == vi, axis=1)
    slots = _SLOT_OF[pu, pv]
    pi = _PATTERN_INDEX[pattern]
    if induced:
        # Induced occurrence on the subset, and the edge is by definition in it.
        return int(_IND_TABLE[masks, pi].sum())
    return int(_EDGE_TABLE[masks, slots, pi].sum())


def multiplicity(outer: str, inner: str) -> int:
    """Occurrences of `inner` inside the pattern graph `outer`, recomputed
    from the edge sets by embedding enumeration (no table lookups)."""
    check_pattern(outer, allow_triangle=False)
    check_pattern(inner, allow_triangle=False)
    outer_edges = frozenset(PATTERN_EDGES[outer])
    return len(_embedding_images(outer_edges, PATTERN_EDGES[inner]))


def find_cycle(graph: Graph, length: int) -> bool:
    """Does the graph contain a simple cycle of exactly this length?

    Depth-first search anchored at the smallest vertex of the candidate
    cycle, so each cycle is explored from one start only. Intended for the
    short cycles (k <= 7) the reduction checks need.
    """
    if length < 3:
        return False
    adj = {v: sorted(graph.neighbors(v)) for v in graph.vertices()}

    def extend(start, current, depth, on_path):
        for nxt in adj[current]:
            if nxt == start and depth == length:
                return True
            if nxt <= start or nxt in on_path or depth >= length:
                continue
            on_path.add(nxt)
            if extend(start, nxt, depth + 1, on_path):
                return True
            on_path.remove(nxt)
        return False

    for start in sorted(adj):
        if extend(start, start, 1, {start}):
            return True
    return False


def count_cycles(graph: Graph, length: int) -> int:
    """Number of simple cycles of exactly this length.

    Same anchored search as find_cycle, but exhaustive: every closed walk
    back to the anchor is tallied, which visits each cycle once per
    direction, so the total halves at the end.
    """
    if length < 3:
        return 0
    adj = {v: sorted(graph.neighbors(v)) for v in graph.vertices()}

    def extend(start, current, depth, on_path):
        found = 0
        for nxt in adj[current]:
            if nxt == start and depth == length:
                found += 1
            if nxt <= start or nxt in on_path or depth >= length:
                continue
            on_path.add(nxt)
            found += extend(start, nxt, depth + 1, on_path)
            on_path.remove(nxt)
        return found

    total = sum(extend(start, start, 1, {start}) for start in sorted(adj))
    return total // 2
