"""Two-level degree partition with hysteresis.

Vertices are split into High and Low by comparing their degree against a
threshold derived from the edge count at the last full rebuild. The lazy
thresholds (promote at 1.5x, demote at 0.5x) keep vertices from oscillating,
and a rebuild is requested once the live edge count drifts too far from the
snapshot the threshold was computed for. Between rebuilds every Low vertex
has degree < 1.5 * threshold and every High vertex degree >= 0.5 * threshold.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidConfig
from .graph import Graph, VertexId


@dataclass(frozen=True)
class PartitionEvent:
    pass


@dataclass(frozen=True)
class LowToHigh(PartitionEvent):
    vertex: VertexId


@dataclass(frozen=True)
class HighToLow(PartitionEvent):
    vertex: VertexId


@dataclass(frozen=True)
class RebuildRequired(PartitionEvent):
    """Structures derived from the partition must be recomputed from scratch
    after the caller re-initializes the partition."""


class EpsilonPartition:
    """side(v) = High iff deg(v) >= threshold at init; hysteresis afterwards.

    threshold = capacity ** epsilon where capacity = max(2, 2 * m) is frozen
    at init. after_update() requests a rebuild once the edge count falls
    below floor(capacity / 4) or reaches capacity, which keeps the number of
    updates between rebuilds proportional to the edge count.
    """

    def __init__(self, graph: Graph, epsilon: float):
        if not 0.0 < epsilon < 1.0:
            raise InvalidConfig(f"epsilon must be in (0, 1), got {epsilon}")
        self.epsilon = epsilon
        self.init(graph)

    def init(self, graph: Graph) -> None:
        self.base_edges = graph.num_edges
        self.capacity = max(2, 2 * self.base_edges)
        self.threshold = self.capacity ** self.epsilon
        self._high = {
            v for v in graph.vertices() if graph.degree(v) >= self.threshold
        }

    def is_high(self, v: VertexId) -> bool:
        return v in self._high

    def high_vertices(self) -> set:
        """Live set of High vertices; callers must not mutate it."""
        return self._high

    def after_update(self, graph: Graph, u: VertexId, v: VertexId):
        """Process the endpoints of the edge update just applied to `graph`.

        Yields move events, smaller endpoint first. Each vertex's side is
        flipped immediately before its event is yielded and not earlier, so
        a consumer that settles derived structures per event always sees the
        partition with prior events applied and later ones still pending.
        (Both endpoints can move on one update; flipping them together would
        let the first event's scans observe the second flip too early.)
        Yields a single RebuildRequired instead once the edge count drifts
        out of range; no sides are touched then and the caller must re-init
        this partition and rebuild anything derived from it.
        """
        m = graph.num_edges
        if m < self.capacity // 4 or m >= self.capacity:
            yield RebuildRequired()
            return
        for w in sorted((u, v)):
            deg = graph.degree(w)
            if w in self._high:
                if deg < 0.5 * self.threshold:
                    self._high.discard(w)
                    yield HighToLow(w)
            elif deg >= 1.5 * self.threshold:
                self._high.add(w)
                yield LowToHigh(w)
