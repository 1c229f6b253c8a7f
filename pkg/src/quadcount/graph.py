"""Undirected simple graph over integer vertex ids.

Adjacency is a dict of sets, which makes membership tests and degree lookups
O(1) and neighbor iteration O(deg). Vertices are registered on first sight
(or explicitly via ensure_vertex) and never removed, so an id that lost all
its edges still reports degree 0 rather than raising.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Set, Tuple

from .errors import InvalidEdge
from .instrument import OpCounter

VertexId = int
Edge = Tuple[VertexId, VertexId]


def edge_key(u: VertexId, v: VertexId) -> Edge:
    """Canonical (min, max) form of an undirected edge."""
    return (u, v) if u <= v else (v, u)


class Graph:
    def __init__(self, ops: OpCounter | None = None) -> None:
        self._adj: dict[VertexId, Set[VertexId]] = {}
        self._m = 0
        self.ops = ops if ops is not None else OpCounter()

    # -- vertices ---------------------------------------------------------

    def ensure_vertex(self, v: VertexId) -> None:
        if v not in self._adj:
            self._adj[v] = set()

    def vertices(self) -> Iterable[VertexId]:
        return self._adj.keys()

    @property
    def num_vertices(self) -> int:
        return len(self._adj)

    # -- edges ------------------------------------------------------------

    @property
    def num_edges(self) -> int:
        return self._m

    def insert_edge(self, u: VertexId, v: VertexId) -> None:
        if u == v:
            raise InvalidEdge(f"self-loop at {u}")
        if u in self._adj and v in self._adj[u]:
            raise InvalidEdge(f"edge {{{u}, {v}}} already present")
        self.ensure_vertex(u)
        self.ensure_vertex(v)
        self._adj[u].add(v)
        self._adj[v].add(u)
        self._m += 1

    def delete_edge(self, u: VertexId, v: VertexId) -> None:
        if u == v or u not in self._adj or v not in self._adj[u]:
            raise InvalidEdge(f"edge {{{u}, {v}}} not present")
        self._adj[u].remove(v)
        self._adj[v].remove(u)
        self._m -= 1

    def has_edge(self, u: VertexId, v: VertexId) -> bool:
        self.ops.n += 1
        nbrs = self._adj.get(u)
        return nbrs is not None and v in nbrs

    def degree(self, v: VertexId) -> int:
        self.ops.n += 1
        nbrs = self._adj.get(v)
        return 0 if nbrs is None else len(nbrs)

    def neighbors(self, v: VertexId) -> Set[VertexId]:
        """Live neighbor set; callers must not mutate it."""
        nbrs = self._adj.get(v)
        if nbrs is None:
            return frozenset()
        self.ops.n += len(nbrs)
        return nbrs

    def edges(self) -> Iterator[Edge]:
        for u, nbrs in self._adj.items():
            for v in nbrs:
                if u < v:
                    yield (u, v)

    def copy(self) -> "Graph":
        g = Graph()
        for v, nbrs in self._adj.items():
            g._adj[v] = set(nbrs)
        g._m = self._m
        return g
