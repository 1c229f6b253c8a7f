"""Sparse auxiliary subgraph counts keyed by vertices, pairs, or triples.

Each table counts small rooted structures whose interior vertices are pinned
to one side of the degree partition; the counting engine combines them into
per-edge pattern counts without touching High neighborhoods. All counts are
non-induced and only nonzero entries are stored.

Tables (key -> what is counted):

  wedges_low       v         2-paths v-x-y with Low midpoint x
  triangles_high   v (High)  triangles through v
  common_low       {u, v}    common Low neighbors of u and v
  common_high      {u, v}    (both High) common High neighbors
  path3_low        {u, v}    3-paths u-x-y-v with x, y Low
  claw_center_low  {u, v}    claws with a Low center and u, v among the leaves
  paw_low          {u, v}    paws with a Low center, one of u/v the arm end,
                             the other a non-center triangle vertex, and the
                             remaining triangle vertex Low
  low_triple_hub   {u, v, w} Low vertices adjacent to all of u, v, w

A store maintains only the tables that were enabled (reference counted, so
two consumers needing the same table share one copy). A store may also be
scoped to an anchor vertex: writes to designated pair/triple tables are then
dropped unless the key contains the anchor, and reads outside the scope fail
loudly instead of returning a misleading zero.

Update contract: apply_edge_delta must run while the edge is present in the
graph (after an insertion, before a deletion); apply_partition_move must run
after the partition side of the moved vertex was flipped. Values are checked
to stay inside [0, 2**64): a negative count raises InconsistentState, an
overflowing one raises OverflowError.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Tuple

from .errors import InconsistentState, InvalidConfig, TableDisabled
from .graph import Graph, VertexId
from .instrument import OpCounter
from .partition import EpsilonPartition

PairKey = Tuple[VertexId, VertexId]
TripleKey = Tuple[VertexId, VertexId, VertexId]

WEDGES_LOW = "wedges_low"
TRIANGLES_HIGH = "triangles_high"
COMMON_LOW = "common_low"
COMMON_HIGH = "common_high"
PATH3_LOW = "path3_low"
CLAW_CENTER_LOW = "claw_center_low"
PAW_LOW = "paw_low"
LOW_TRIPLE_HUB = "low_triple_hub"

ALL_TABLES = (
    WEDGES_LOW,
    TRIANGLES_HIGH,
    COMMON_LOW,
    COMMON_HIGH,
    PATH3_LOW,
    CLAW_CENTER_LOW,
    PAW_LOW,
    LOW_TRIPLE_HUB,
)

# Vertex-keyed tables can never be scoped to an anchor pair-wise.
VERTEX_TABLES = frozenset({WEDGES_LOW, TRIANGLES_HIGH})

_U64_MAX = 2**64 - 1


def pair_key(u: VertexId, v: VertexId) -> PairKey:
    return (u, v) if u < v else (v, u)


def triple_key(a: VertexId, b: VertexId, c: VertexId) -> TripleKey:
    if a > b:
        a, b = b, a
    if b > c:
        b, c = c, b
        if a > b:
            a, b = b, a
    return (a, b, c)


class AuxStore:
    def __init__(
        self,
        tables: Iterable[str] = (),
        ops: OpCounter | None = None,
        scope: VertexId | None = None,
        scoped_tables: Iterable[str] = (),
    ):
        self.ops = ops if ops is not None else OpCounter()
        self.scope = scope
        self.scoped_tables = frozenset(scoped_tables)
        if self.scoped_tables and scope is None:
            raise InvalidConfig("scoped_tables given without a scope vertex")
        if self.scoped_tables & VERTEX_TABLES:
            raise InvalidConfig("vertex-keyed tables cannot be scoped")
        unknown = self.scoped_tables - set(ALL_TABLES)
        if unknown:
            raise InvalidConfig(f"unknown tables: {sorted(unknown)}")
        self._refs: dict[str, int] = {}
        self._data: dict[str, dict] = {}
        for t in tables:
            self.enable(t)

    # -- configuration ------------------------------------------------------

    def enable(self, table: str) -> None:
        if table not in ALL_TABLES:
            raise InvalidConfig(f"unknown table {table!r}")
        self._refs[table] = self._refs.get(table, 0) + 1
        if table not in self._data:
            self._data[table] = {}

    def disable(self, table: str) -> None:
        refs = self._refs.get(table, 0)
        if refs <= 0:
            raise TableDisabled(f"{table} is not enabled")
        if refs == 1:
            del self._refs[table]
            del self._data[table]
        else:
            self._refs[table] = refs - 1

    def active_tables(self) -> tuple:
        return tuple(t for t in ALL_TABLES if t in self._data)

    def is_active(self, table: str) -> bool:
        return table in self._data

    # -- access -------------------------------------------------------------

    def get(self, table: str, key) -> int:
        data = self._data.get(table)
        if data is None:
            raise TableDisabled(f"{table} is not maintained by this store")
        if table in self.scoped_tables and self.scope not in key:
            raise TableDisabled(
                f"{table} is scoped to {self.scope}; key {key} is outside"
            )
        self.ops.n += 1
        return data.get(key, 0)

    def dump(self) -> dict:
        """Deep copy of every active table, zero entries absent (for audits)."""
        return {t: dict(d) for t, d in self._data.items()}

    def _bump(self, table: str, key, delta: int) -> None:
        # Internal write: key must already be canonical. Silently skips
        # inactive tables and out-of-scope keys so the maintenance routines
        # below stay oblivious to store configuration.
        if delta == 0:
            return
        data = self._data.get(table)
        if data is None:
            return
        if table in self.scoped_tables and self.scope not in key:
            return
        self.ops.n += 1
        value = data.get(key, 0) + delta
        if value == 0:
            del data[key]
        elif value < 0:
            raise InconsistentState(f"{table}[{key}] would become {value}")
        elif value > _U64_MAX:
            raise OverflowError(f"{table}[{key}] exceeds 64 bits")
        else:
            data[key] = value

    def _drop(self, table: str, key) -> None:
        data = self._data.get(table)
        if data is not None:
            self.ops.n += 1
            data.pop(key, None)

    # -- edge updates ---------------------------------------------------------

    def apply_edge_delta(
        self,
        graph: Graph,
        partition: EpsilonPartition,
        u: VertexId,
        v: VertexId,
        sign: int,
    ) -> None:
        """Fold the insertion (sign +1) or deletion (sign -1) of edge {u, v}
        into every active table. The edge must currently be in the graph."""
        if sign not in (1, -1):
            raise InvalidConfig(f"sign must be +1 or -1, got {sign}")
        if not graph.has_edge(u, v):
            raise InconsistentState(
                f"edge delta for {{{u}, {v}}} but the edge is not in the graph"
            )
        high = partition.high_vertices()

        if WEDGES_LOW in self._data:
            for a, b in ((u, v), (v, u)):
                if not partition.is_high(a):
                    for w in graph.neighbors(a):
                        if w != b:
                            self._bump(WEDGES_LOW, w, sign)
                    self._bump(WEDGES_LOW, b, sign * (graph.degree(a) - 1))

        if COMMON_LOW in self._data:
            for a, b in ((u, v), (v, u)):
                if not partition.is_high(a):
                    for w in graph.neighbors(a):
                        if w != b:
                            self._bump(COMMON_LOW, pair_key(b, w), sign)

        if TRIANGLES_HIGH in self._data:
            shared_high = 0
            for h in high:
                if h != u and h != v and graph.has_edge(h, u) and graph.has_edge(h, v):
                    self._bump(TRIANGLES_HIGH, h, sign)
                    shared_high += 1
            for a in (u, v):
                if partition.is_high(a):
                    shared_low = self.get(COMMON_LOW, pair_key(u, v))
                    self._bump(TRIANGLES_HIGH, a, sign * (shared_high + shared_low))

        if PATH3_LOW in self._data:
            for a, b in ((u, v), (v, u)):
                if not partition.is_high(a):
                    for w in graph.neighbors(a):
                        if w == b or partition.is_high(w):
                            continue
                        for x in graph.neighbors(w):
                            if x != a and x != b:
                                self._bump(PATH3_LOW, pair_key(b, x), sign)
            if not partition.is_high(u) and not partition.is_high(v):
                for x in graph.neighbors(u):
                    if x == v:
                        continue
                    for y in graph.neighbors(v):
                        if y != u and y != x:
                            self._bump(PATH3_LOW, pair_key(x, y), sign)

        if CLAW_CENTER_LOW in self._data:
            for a, b in ((u, v), (v, u)):
                if not partition.is_high(a):
                    others = [w for w in graph.neighbors(a) if w != b]
                    for x, y in combinations(others, 2):
                        self._bump(CLAW_CENTER_LOW, pair_key(x, y), sign)
                    spare = graph.degree(a) - 2
                    for w in others:
                        self._bump(CLAW_CENTER_LOW, pair_key(b, w), sign * spare)

        if PAW_LOW in self._data:
            for a, b in ((u, v), (v, u)):
                if partition.is_high(a):
                    continue
                others = [w for w in graph.neighbors(a) if w != b]
                low_others = [w for w in others if not partition.is_high(w)]
                # center a, arm a-b: triangle {a, x, y}, Low x off the key
                for x in low_others:
                    for y in others:
                        if y != x and graph.has_edge(x, y):
                            self._bump(PAW_LOW, pair_key(b, y), sign)
                for x in low_others:
                    if not graph.has_edge(x, b):
                        continue
                    # center a, triangle {a, b, x} with x Low off the key, arm a-y
                    for y in others:
                        if y != x:
                            self._bump(PAW_LOW, pair_key(b, y), sign)
                    # center x, triangle {x, a, b} with a Low off the key, arm x-y
                    for y in graph.neighbors(x):
                        if y != a and y != b:
                            self._bump(PAW_LOW, pair_key(b, y), sign)
                if not partition.is_high(b):
                    # center a, triangle {a, b, x} with b Low off the key, arm a-y
                    for x in others:
                        if not graph.has_edge(x, b):
                            continue
                        for y in others:
                            if y != x:
                                self._bump(PAW_LOW, pair_key(x, y), sign)

        if COMMON_HIGH in self._data:
            if partition.is_high(u) and partition.is_high(v):
                for h in high:
                    if h == u or h == v:
                        continue
                    if graph.has_edge(h, u):
                        self._bump(COMMON_HIGH, pair_key(h, v), sign)
                    if graph.has_edge(h, v):
                        self._bump(COMMON_HIGH, pair_key(h, u), sign)

        if LOW_TRIPLE_HUB in self._data:
            for a, b in ((u, v), (v, u)):
                if not partition.is_high(a):
                    others = [w for w in graph.neighbors(a) if w != b]
                    for x, y in combinations(others, 2):
                        self._bump(LOW_TRIPLE_HUB, triple_key(b, x, y), sign)

    # -- partition moves ------------------------------------------------------

    def apply_partition_move(
        self,
        graph: Graph,
        partition: EpsilonPartition,
        v: VertexId,
        to_high: bool,
    ) -> None:
        """Fold a side change of v into every active table. The partition
        must already report the new side for v."""
        if partition.is_high(v) != to_high:
            raise InconsistentState(
                f"partition side of {v} does not match the reported move"
            )
        # Structures with v in a Low role disappear on promotion and
        # reappear on demotion.
        low_sign = -1 if to_high else 1
        nbrs = sorted(graph.neighbors(v))
        deg = len(nbrs)

        if WEDGES_LOW in self._data:
            for w in nbrs:
                self._bump(WEDGES_LOW, w, low_sign * (deg - 1))

        if COMMON_LOW in self._data:
            for x, y in combinations(nbrs, 2):
                self._bump(COMMON_LOW, pair_key(x, y), low_sign)

        if TRIANGLES_HIGH in self._data:
            if to_high:
                count = 0
                for i, x in enumerate(nbrs):
                    for y in nbrs[i + 1 :]:
                        if graph.has_edge(x, y):
                            count += 1
                self._bump(TRIANGLES_HIGH, v, count)
            else:
                self._drop(TRIANGLES_HIGH, v)

        if PATH3_LOW in self._data:
            # v is one Low interior vertex, x the other
            for x in nbrs:
                if partition.is_high(x):
                    continue
                for w in nbrs:
                    if w == x:
                        continue
                    for y in graph.neighbors(x):
                        if y != v and y != w:
                            self._bump(PATH3_LOW, pair_key(w, y), low_sign)

        if CLAW_CENTER_LOW in self._data:
            spare = deg - 2
            for x, y in combinations(nbrs, 2):
                self._bump(CLAW_CENTER_LOW, pair_key(x, y), low_sign * spare)

        if PAW_LOW in self._data:
            # v was/becomes the Low center
            for i, y in enumerate(nbrs):
                for z in nbrs[i + 1 :]:
                    for x in nbrs:
                        if x == y or x == z or partition.is_high(x):
                            continue
                        if graph.has_edge(x, y):
                            self._bump(PAW_LOW, pair_key(y, z), low_sign)
                        if graph.has_edge(x, z):
                            self._bump(PAW_LOW, pair_key(y, z), low_sign)
            # v was/becomes the Low non-center triangle vertex; x is the
            # (still Low) center, the arm x-z hangs off it
            for x in nbrs:
                if partition.is_high(x):
                    continue
                for y in nbrs:
                    if y == x or not graph.has_edge(x, y):
                        continue
                    for z in graph.neighbors(x):
                        if z != v and z != y:
                            self._bump(PAW_LOW, pair_key(y, z), low_sign)

        if COMMON_HIGH in self._data:
            high = partition.high_vertices()
            high_nbrs = [w for w in nbrs if partition.is_high(w)]
            pair_sign = 1 if to_high else -1
            for x, y in combinations(high_nbrs, 2):
                self._bump(COMMON_HIGH, pair_key(x, y), pair_sign)
            if to_high:
                for w in high_nbrs:
                    for h in high:
                        if h != v and graph.has_edge(w, h):
                            self._bump(COMMON_HIGH, pair_key(v, h), 1)
            else:
                for h in high:
                    self._drop(COMMON_HIGH, pair_key(v, h))

        if LOW_TRIPLE_HUB in self._data:
            for x, y, z in combinations(nbrs, 3):
                self._bump(LOW_TRIPLE_HUB, (x, y, z), low_sign)

    # -- rebuild ----------------------------------------------------------------

    def recompute_from_scratch(
        self, graph: Graph, partition: EpsilonPartition
    ) -> None:
        """Clear every active table and replay all edges one by one against
        the (freshly rebuilt) partition. The replay graph starts empty, so
        the per-edge deltas telescope to the definitional values."""
        for t in self._data:
            self._data[t] = {}
        staging = Graph(ops=self.ops)
        for x in graph.vertices():
            staging.ensure_vertex(x)
        for a, b in sorted(graph.edges()):
            staging.insert_edge(a, b)
            self.apply_edge_delta(staging, partition, a, b, 1)
