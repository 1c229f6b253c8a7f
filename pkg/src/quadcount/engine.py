"""The dynamic counting engine.

One engine owns a graph, a degree partition per distinct epsilon in use, and
the auxiliary stores hanging off those partitions. Every edge update flows
through three phases:

* insert: add the edge, feed the delta to every store, then add the
  per-pattern edge counts to the running totals;
* delete: subtract the edge counts first (while the edge is still in the
  graph and every table still reflects it), feed the negative delta to the
  stores, then remove the edge;
* finally let each partition react to the new degrees, replaying any
  side changes into its stores, or rebuilding from scratch when the edge
  count has drifted past the capacity window.

Totals are exact at every step; epsilon only shifts work between the tables
and the update-time scans.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, Optional, Tuple

from .anchored import ANCHORED_TABLES, SCounterState, anchored_delta
from .errors import InvalidConfig, InvalidEdge, PatternDisabled
from .graph import Graph, VertexId, edge_key
from .instrument import OpCounter
from .partition import EpsilonPartition, LowToHigh, RebuildRequired
from .patterns import (
    ALL_PATTERNS,
    C4,
    CLAW,
    DIAMOND,
    K4,
    PATH3,
    PAW,
    TRIANGLE,
    check_pattern,
    induced_from_subgraph,
)
from .queries import (
    claw_edge_query,
    clique4_edge_scan,
    cycle4_edge_query,
    diamond_edge_query,
    path3_edge_query,
    paw_edge_query,
    triangle_edge_query,
)
from .queries import triangle_vertex_query as _vertex_triangles
from .tables import (
    CLAW_CENTER_LOW,
    COMMON_HIGH,
    COMMON_LOW,
    LOW_TRIPLE_HUB,
    PATH3_LOW,
    PAW_LOW,
    TRIANGLES_HIGH,
    VERTEX_TABLES,
    WEDGES_LOW,
    AuxStore,
)

DEFAULT_EPSILON: Dict[str, float] = {
    TRIANGLE: 0.5,
    PATH3: 0.5,
    PAW: 1 / 3,
    C4: 1 / 3,
    DIAMOND: 1 / 3,
}

# Tables each pattern's edge query reads from the shared (global) store.
GLOBAL_TABLES: Dict[str, Tuple[str, ...]] = {
    TRIANGLE: (COMMON_LOW,),
    PATH3: (WEDGES_LOW, COMMON_LOW),
    CLAW: (),
    PAW: (COMMON_LOW, TRIANGLES_HIGH, CLAW_CENTER_LOW),
    C4: (COMMON_LOW, PATH3_LOW, COMMON_HIGH),
    DIAMOND: (COMMON_LOW, PAW_LOW, COMMON_HIGH, LOW_TRIPLE_HUB),
    K4: (),
}

_EDGE_QUERIES = {
    TRIANGLE: triangle_edge_query,
    PATH3: path3_edge_query,
    PAW: paw_edge_query,
    C4: cycle4_edge_query,
    DIAMOND: diamond_edge_query,
}


@dataclass
class EngineConfig:
    """What to track and how.

    patterns: which counts to maintain (any subset of ALL_PATTERNS).
    epsilon: per-pattern overrides of the partition exponent.
    anchors: vertices whose per-vertex pattern counts are kept live.
    vertex_triangles: keep the per-vertex triangle table (needed for
        triangle_vertex_query; costs one extra table on the triangle store).
    oracle_check / ops_out: stream-runner options (cross-check every query
        against the reference counter / write per-update operation counts);
        ignored by the engine itself.
    """

    patterns: Tuple[str, ...] = ALL_PATTERNS
    epsilon: Dict[str, float] = field(default_factory=dict)
    anchors: Tuple[VertexId, ...] = ()
    vertex_triangles: bool = True
    oracle_check: bool = False
    ops_out: Optional[str] = None


class _Domain:
    """One partition plus every store that lives on it."""

    __slots__ = ("epsilon", "partition", "stores")

    def __init__(self, epsilon: float, graph: Graph):
        self.epsilon = epsilon
        self.partition = EpsilonPartition(graph, epsilon)
        self.stores: list[AuxStore] = []


class CountingEngine:
    """Exact dynamic counts of triangles and connected four-vertex patterns."""

    def __init__(self, config: Optional[EngineConfig] = None, **kwargs):
        if config is None:
            config = EngineConfig(**kwargs)
        elif kwargs:
            raise InvalidConfig("pass either a config object or keyword options")
        patterns = tuple(dict.fromkeys(config.patterns))
        for p in patterns:
            check_pattern(p)
        for p, eps in config.epsilon.items():
            check_pattern(p)
            if p not in DEFAULT_EPSILON:
                raise InvalidConfig(f"{p} counting does not use a partition")
            if not 0.0 < eps < 1.0:
                raise InvalidConfig(f"epsilon for {p} must be in (0, 1), got {eps}")
        anchors = tuple(dict.fromkeys(config.anchors))
        self.config = config
        self.ops = OpCounter()
        self.graph = Graph(ops=self.ops)
        self._patterns = tuple(p for p in ALL_PATTERNS if p in patterns)
        self._anchors = anchors
        self._totals: Dict[str, int] = {p: 0 for p in self._patterns}
        self._anchored: Dict[VertexId, SCounterState] = {}
        self._domains: Dict[float, _Domain] = {}
        self._global_stores: Dict[float, AuxStore] = {}
        self._anchor_stores: Dict[Tuple[VertexId, float], AuxStore] = {}
        self._wire(config)

    # -- construction ---------------------------------------------------

    def _epsilon_for(self, pattern: str) -> float:
        return self.config.epsilon.get(pattern, DEFAULT_EPSILON[pattern])

    def _domain(self, eps: float) -> _Domain:
        dom = self._domains.get(eps)
        if dom is None:
            dom = _Domain(eps, self.graph)
            self._domains[eps] = dom
        return dom

    def _wire(self, config: EngineConfig) -> None:
        for s in self._anchors:
            self.graph.ensure_vertex(s)
            self._anchored[s] = SCounterState(s, {p: 0 for p in self._patterns})

        for p in self._patterns:
            tables = GLOBAL_TABLES[p]
            if p == TRIANGLE and config.vertex_triangles:
                tables = tables + (TRIANGLES_HIGH,)
            if not tables:
                continue
            eps = self._epsilon_for(p)
            dom = self._domain(eps)
            store = self._global_stores.get(eps)
            if store is None:
                store = AuxStore(ops=self.ops)
                self._global_stores[eps] = store
                dom.stores.append(store)
            for t in tables:
                store.enable(t)

        # Anchored stores share one instance per (anchor, epsilon). A table
        # may be scoped only if every pattern on that store scopes it.
        plans: Dict[Tuple[VertexId, float], Dict[str, list]] = {}
        for s in self._anchors:
            for p in self._patterns:
                full, scoped = ANCHORED_TABLES[p]
                if not full and not scoped:
                    continue
                plan = plans.setdefault((s, self._epsilon_for(p)), {})
                for t in full:
                    plan.setdefault(t, []).append(False)
                for t in scoped:
                    plan.setdefault(t, []).append(True)
        for (s, eps), plan in sorted(
            plans.items(), key=lambda kv: (self._anchors.index(kv[0][0]), kv[0][1])
        ):
            scoped_tables = tuple(
                t
                for t, wants in plan.items()
                if all(wants) and t not in VERTEX_TABLES
            )
            store = AuxStore(ops=self.ops, scope=s, scoped_tables=scoped_tables)
            for t, wants in plan.items():
                for _ in wants:
                    store.enable(t)
            self._anchor_stores[(s, eps)] = store
            self._domain(eps).stores.append(store)

        # Deterministic update order over domains.
        self._domain_list = [self._domains[e] for e in sorted(self._domains)]

    # -- updates ----------------------------------------------------------

    def insert_edge(self, u: VertexId, v: VertexId) -> None:
        self.graph.insert_edge(u, v)
        for dom in self._domain_list:
            for store in dom.stores:
                store.apply_edge_delta(self.graph, dom.partition, u, v, 1)
        self.on_update(u, v, 1)
        self._settle(u, v)

    def delete_edge(self, u: VertexId, v: VertexId) -> None:
        if not self.graph.has_edge(u, v):
            raise InvalidEdge(f"edge {edge_key(u, v)} is not in the graph")
        self.on_update(u, v, -1)
        for dom in self._domain_list:
            for store in dom.stores:
                store.apply_edge_delta(self.graph, dom.partition, u, v, -1)
        self.graph.delete_edge(u, v)
        self._settle(u, v)

    def on_update(self, u: VertexId, v: VertexId, sign: int) -> None:
        """Adjust every tracked total by the updated edge's pattern counts.

        Called with the edge present in both graph and tables: after the
        insert has been applied, or before the delete is."""
        for p in self._patterns:
            self._totals[p] += sign * self._edge_count(p, u, v)
        for s in self._anchors:
            state = self._anchored[s]
            for p in self._patterns:
                partition, store = self._anchored_context(s, p)
                state.totals[p] += sign * anchored_delta(
                    p, self.graph, partition, store, s, u, v
                )

    def _edge_count(self, pattern: str, u: VertexId, v: VertexId) -> int:
        if pattern == CLAW:
            return claw_edge_query(self.graph, u, v)
        if pattern == K4:
            return clique4_edge_scan(self.graph, u, v)
        eps = self._epsilon_for(pattern)
        dom = self._domains[eps]
        store = self._global_stores[eps]
        return _EDGE_QUERIES[pattern](self.graph, dom.partition, store, u, v)

    def _anchored_context(self, s: VertexId, pattern: str):
        if pattern in (CLAW, K4):
            return None, None
        eps = self._epsilon_for(pattern)
        return self._domains[eps].partition, self._anchor_stores[(s, eps)]

    def _settle(self, u: VertexId, v: VertexId) -> None:
        for dom in self._domain_list:
            for event in dom.partition.after_update(self.graph, u, v):
                if isinstance(event, RebuildRequired):
                    dom.partition.init(self.graph)
                    for store in dom.stores:
                        store.recompute_from_scratch(self.graph, dom.partition)
                else:
                    to_high = isinstance(event, LowToHigh)
                    for store in dom.stores:
                        store.apply_partition_move(
                            self.graph, dom.partition, event.vertex, to_high
                        )

    # -- queries ----------------------------------------------------------

    def _require(self, pattern: str) -> None:
        check_pattern(pattern)
        if pattern not in self._totals:
            raise PatternDisabled(f"{pattern} is not tracked by this engine")

    def count(self, pattern: str) -> int:
        self._require(pattern)
        return self._totals[pattern]

    def counts(self) -> Dict[str, int]:
        return {p: self.count(p) for p in self._patterns}

    def induced_counts(self) -> Dict[str, int]:
        counts = self.counts()
        missing = [p for p in ALL_PATTERNS if p != TRIANGLE and p not in counts]
        if missing:
            raise PatternDisabled(
                "induced conversion needs every four-vertex pattern; missing "
                + ", ".join(missing)
            )
        return induced_from_subgraph(counts)

    def edge_query(self, pattern: str, u: VertexId, v: VertexId) -> int:
        self._require(pattern)
        if not self.graph.has_edge(u, v):
            return 0
        return self._edge_count(pattern, u, v)

    def triangle_vertex_query(self, v: VertexId) -> int:
        self._require(TRIANGLE)
        if not self.config.vertex_triangles:
            raise InvalidConfig("engine built without the per-vertex triangle table")
        eps = self._epsilon_for(TRIANGLE)
        return _vertex_triangles(
            self.graph, self._domains[eps].partition, self._global_stores[eps], v
        )

    def s_query(self, s: VertexId, pattern: str) -> int:
        self._require(pattern)
        if s not in self._anchored:
            raise InvalidConfig(f"vertex {s} is not a registered anchor")
        return self._anchored[s].totals[pattern]

    def anchors(self) -> Tuple[VertexId, ...]:
        return self._anchors

    # -- introspection (tests and audits) ---------------------------------

    def partition_for(self, pattern: str) -> EpsilonPartition:
        self._require(pattern)
        return self._domains[self._epsilon_for(pattern)].partition

    def store_for(self, pattern: str) -> AuxStore:
        self._require(pattern)
        return self._global_stores[self._epsilon_for(pattern)]

    def anchored_store_for(self, s: VertexId, pattern: str) -> Optional[AuxStore]:
        self._require(pattern)
        if pattern in (CLAW, K4):
            return None
        return self._anchor_stores[(s, self._epsilon_for(pattern))]

    def domains(self) -> Iterable[_Domain]:
        return tuple(self._domain_list)
