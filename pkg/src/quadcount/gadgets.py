"""Adversarial instance generators from Boolean matrix-vector products.

Each generator turns a Boolean matrix M and query vectors u, v into a graph
update stream whose final graph witnesses u' M v = 1 through a target
structure: for most problems the structure appears iff the product is 1,
while the 3-path and even-cycle instances compare a count against a
computable vector-independent floor. The scaffold is a layered graph: rows
of M become rail paths on the left, columns rails on the right, and the
matrix itself a bipartite band between the innermost layers. The query
vectors arrive as edge updates touching an apex vertex (or the outermost
layers), so a correct dynamic counter answers the product query after
O(n1 + n2) updates.

These serve two purposes here: executable verification that the reductions
are faithful (the detection answer must match the product for every M, u, v)
and a family of worst-case-flavored streams for exercising the engines.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence, Tuple

from .engine import CountingEngine
from .errors import InvalidConfig, SizeLimit, UnsupportedProblem
from .graph import Edge, Graph, edge_key
from .oracle import count_cycles, find_cycle, oracle_count
from .patterns import C4, DIAMOND, K4, PATH3, PAW, TRIANGLE

ODD_CYCLE = "odd-cycle"
EVEN_CYCLE = "even-cycle"
PAW_PROBLEM = "paw"
DIAMOND_PROBLEM = "diamond"
CLIQUE4_PROBLEM = "clique4"
PATH3_COUNT = "path3-count"

PROBLEMS = (
    ODD_CYCLE,
    EVEN_CYCLE,
    PAW_PROBLEM,
    DIAMOND_PROBLEM,
    CLIQUE4_PROBLEM,
    PATH3_COUNT,
)

INCREMENTAL = "incremental"
DECREMENTAL = "decremental"

BACKENDS = ("engine", "anchored", "oracle")

MAX_EDGES = 10_000


@dataclass(frozen=True)
class BoolMatrix:
    """Dense 0/1 matrix; rows index the left side, columns the right."""

    bits: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        if not self.bits or not self.bits[0]:
            raise InvalidConfig("matrix needs at least one row and one column")
        width = len(self.bits[0])
        for row in self.bits:
            if len(row) != width:
                raise InvalidConfig("matrix rows must have equal length")
            for b in row:
                if b not in (0, 1):
                    raise InvalidConfig(f"matrix entries must be 0 or 1, got {b!r}")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence]) -> "BoolMatrix":
        parsed = []
        for row in rows:
            if isinstance(row, str):
                parsed.append(tuple(int(c) for c in row))
            else:
                parsed.append(tuple(int(b) for b in row))
        return cls(tuple(parsed))

    @property
    def n1(self) -> int:
        return len(self.bits)

    @property
    def n2(self) -> int:
        return len(self.bits[0])

    def product(self, u: Sequence[int], v: Sequence[int]) -> bool:
        """u' M v over the Boolean semiring."""
        return any(
            u[i] and self.bits[i][j] and v[j]
            for i in range(self.n1)
            for j in range(self.n2)
        )


def _layer_ids(offset: int, width: int, layer: int) -> int:
    return offset + layer * width


def build_G(M: BoolMatrix, g: int, h: int) -> Graph:
    """Layered two-sided scaffold: left rails of length g, right rails of
    length h, and the matrix band between the innermost layers."""
    if g < 0 or h < 0:
        raise InvalidConfig("layer depths must be non-negative")
    n1, n2 = M.n1, M.n2
    graph = Graph()
    right_base = (g + 1) * n1
    for p in range(g + 1):
        for i in range(n1):
            graph.ensure_vertex(p * n1 + i)
    for q in range(h + 1):
        for j in range(n2):
            graph.ensure_vertex(right_base + q * n2 + j)
    for p in range(g):
        for i in range(n1):
            graph.insert_edge(p * n1 + i, (p + 1) * n1 + i)
    for q in range(h):
        for j in range(n2):
            graph.insert_edge(right_base + q * n2 + j, right_base + (q + 1) * n2 + j)
    for i in range(n1):
        for j in range(n2):
            if M.bits[i][j]:
                graph.insert_edge(g * n1 + i, right_base + h * n2 + j)
    return graph


def build_H(M: BoolMatrix, g: int, h: int) -> Graph:
    """Doubled scaffold for even-cycle instances: the left side exists in a
    top and a bottom copy, the matrix band is split between them by the sign
    of i - j, and the edges between layers 0 and 1 are left out (they carry
    the query vectors).

    Each set bit places a band edge at both layer ends of its copy, so bits
    that share rows and columns within one triangular half close even cycles
    of their own. The reduction runner counts those separately; the scaffold
    is a forest only when each half's band is."""
    if g < 1 or h < 1:
        raise InvalidConfig("the doubled scaffold needs depth at least 1 per side")
    n1, n2 = M.n1, M.n2
    graph = Graph()
    bottom_base = (g + 1) * n1
    right_base = 2 * (g + 1) * n1
    for p in range(g + 1):
        for i in range(n1):
            graph.ensure_vertex(p * n1 + i)
            graph.ensure_vertex(bottom_base + p * n1 + i)
    for q in range(h + 1):
        for j in range(n2):
            graph.ensure_vertex(right_base + q * n2 + j)
    for p in range(1, g):
        for i in range(n1):
            graph.insert_edge(p * n1 + i, (p + 1) * n1 + i)
            graph.insert_edge(bottom_base + p * n1 + i, bottom_base + (p + 1) * n1 + i)
    for q in range(1, h):
        for j in range(n2):
            graph.insert_edge(right_base + q * n2 + j, right_base + (q + 1) * n2 + j)
    for i in range(n1):
        for j in range(n2):
            if not M.bits[i][j]:
                continue
            if i <= j:
                graph.insert_edge(i, right_base + j)
                graph.insert_edge(g * n1 + i, right_base + h * n2 + j)
            else:
                graph.insert_edge(bottom_base + i, right_base + j)
                graph.insert_edge(bottom_base + g * n1 + i, right_base + h * n2 + j)
    return graph


@dataclass(frozen=True)
class GadgetSpec:
    """One reduction instance: matrix, target problem, and update direction.

    The layer depths g and h are fixed by the problem (cycle length for the
    cycle problems, the constructions' constants otherwise).
    """

    matrix: BoolMatrix
    problem: str
    k: Optional[int] = None
    direction: str = INCREMENTAL
    g: int = field(init=False)
    h: int = field(init=False)

    def __post_init__(self):
        if self.problem not in PROBLEMS:
            raise InvalidConfig(f"unknown problem {self.problem!r}")
        if self.direction not in (INCREMENTAL, DECREMENTAL):
            raise InvalidConfig(f"unknown direction {self.direction!r}")
        if self.problem == ODD_CYCLE:
            if self.k is None or self.k < 3 or self.k % 2 == 0:
                raise InvalidConfig("odd-cycle instances need odd k >= 3")
            g = h = (self.k - 3) // 2
        elif self.problem == EVEN_CYCLE:
            if self.k is None or self.k < 4 or self.k % 2 == 1:
                raise InvalidConfig("even-cycle instances need even k >= 4")
            g = h = self.k // 2 - 1
        else:
            if self.k is not None:
                raise InvalidConfig(f"{self.problem} does not take a cycle length")
            if self.problem in (DIAMOND_PROBLEM, CLIQUE4_PROBLEM):
                g, h = 1, 0
            else:
                g = h = 0
        object.__setattr__(self, "g", g)
        object.__setattr__(self, "h", h)

    # -- layout --------------------------------------------------------

    @property
    def n1(self) -> int:
        return self.matrix.n1

    @property
    def n2(self) -> int:
        return self.matrix.n2

    def left(self, p: int, i: int) -> int:
        return p * self.n1 + i

    def right(self, q: int, j: int) -> int:
        return (self.g + 1) * self.n1 + q * self.n2 + j

    def bottom(self, p: int, i: int) -> int:
        return (self.g + 1) * self.n1 + p * self.n1 + i

    def h_right(self, q: int, j: int) -> int:
        return 2 * (self.g + 1) * self.n1 + q * self.n2 + j

    @property
    def apex(self) -> int:
        if self.problem == EVEN_CYCLE:
            raise InvalidConfig("even-cycle instances have no apex vertex")
        return (self.g + 1) * self.n1 + (self.h + 1) * self.n2

    @property
    def tail(self) -> int:
        if self.problem not in (PAW_PROBLEM, PATH3_COUNT):
            raise InvalidConfig(f"{self.problem} instances have no tail vertex")
        return self.apex + 1

    def vertices(self) -> Tuple[int, ...]:
        if self.problem == EVEN_CYCLE:
            count = 2 * (self.g + 1) * self.n1 + (self.h + 1) * self.n2
            return tuple(range(count))
        count = self.apex + 1
        if self.problem in (PAW_PROBLEM, PATH3_COUNT):
            count += 1
        return tuple(range(count))

    # -- edges -----------------------------------------------------------

    def scaffold(self) -> Graph:
        if self.problem == EVEN_CYCLE:
            return build_H(self.matrix, self.g, self.h)
        return build_G(self.matrix, self.g, self.h)

    def static_edges(self) -> Tuple[Edge, ...]:
        """Edges present throughout the run, regardless of u and v."""
        edges = list(self.scaffold().edges())
        if self.problem == PAW_PROBLEM:
            edges.append(edge_key(self.apex, self.tail))
        if self.problem == CLIQUE4_PROBLEM:
            for i in range(self.n1):
                for j in range(self.n2):
                    edges.append(edge_key(self.left(0, i), self.right(0, j)))
        return tuple(sorted(set(edges)))

    def u_edges(self, i: int) -> Tuple[Edge, ...]:
        """Edges whose presence encodes u_i = 1."""
        if self.problem == EVEN_CYCLE:
            return (
                edge_key(self.left(0, i), self.left(1, i)),
                edge_key(self.bottom(0, i), self.bottom(1, i)),
            )
        if self.problem in (DIAMOND_PROBLEM, CLIQUE4_PROBLEM):
            return (
                edge_key(self.apex, self.left(0, i)),
                edge_key(self.apex, self.left(1, i)),
            )
        return (edge_key(self.apex, self.left(0, i)),)

    def v_edges(self, j: int) -> Tuple[Edge, ...]:
        """Edges whose presence encodes v_j = 1."""
        if self.problem == EVEN_CYCLE:
            return (edge_key(self.h_right(0, j), self.h_right(1, j)),)
        if self.problem == PATH3_COUNT:
            return (edge_key(self.tail, self.right(0, j)),)
        return (edge_key(self.apex, self.right(0, j)),)

    @property
    def pattern(self) -> Optional[str]:
        """The engine-countable pattern that witnesses a hit, if any."""
        if self.problem == ODD_CYCLE:
            return TRIANGLE if self.k == 3 else None
        if self.problem == EVEN_CYCLE:
            return C4 if self.k == 4 else None
        return {
            PAW_PROBLEM: PAW,
            DIAMOND_PROBLEM: DIAMOND,
            CLIQUE4_PROBLEM: K4,
            PATH3_COUNT: PATH3,
        }[self.problem]

    def initial_edges(self) -> Tuple[Edge, ...]:
        edges = list(self.static_edges())
        if self.direction == DECREMENTAL:
            for i in range(self.n1):
                edges.extend(self.u_edges(i))
            for j in range(self.n2):
                edges.extend(self.v_edges(j))
        return tuple(sorted(set(edges)))

    def updates(self, u: Sequence[int], v: Sequence[int]) -> Tuple[Tuple, ...]:
        """The per-arrival update sequence: one insert (or delete) per
        encoding edge of each set (or cleared) bit, left side first."""
        if len(u) != self.n1 or len(v) != self.n2:
            raise InvalidConfig(
                f"vector lengths must be {self.n1} and {self.n2}, "
                f"got {len(u)} and {len(v)}"
            )
        keep = 1 if self.direction == INCREMENTAL else 0
        op = "+" if self.direction == INCREMENTAL else "-"
        out = []
        for i, bit in enumerate(u):
            if bit == keep:
                out.extend((op, a, b) for a, b in self.u_edges(i))
        for j, bit in enumerate(v):
            if bit == keep:
                out.extend((op, a, b) for a, b in self.v_edges(j))
        return tuple(out)


@dataclass(frozen=True)
class ReductionRun:
    """Outcome of one reduction instance against one backend."""

    spec: GadgetSpec
    backend: str
    base_edges: Tuple[Edge, ...]
    updates: Tuple[Tuple, ...]
    expected: bool
    observed: bool

    @property
    def agree(self) -> bool:
        return self.expected == self.observed


def _path3_threshold(spec: GadgetSpec, u: Sequence[int], v: Sequence[int],
                     anchored: bool) -> int:
    """Number of 3-paths the final graph has when u' M v = 0.

    The scaffold contributes a fixed amount; each pendant edge at the apex
    (resp. tail) adds the 2-paths from its attachment point plus the paths
    through the apex itself. Any excess over this total is exactly the
    number of (i, j) hits, so a strict comparison decides the product.
    The anchored variant keeps only the apex-side terms: those are the
    3-paths through the apex."""
    bits = spec.matrix.bits
    deg_l = [sum(row) for row in bits]
    deg_r = [sum(bits[i][j] for i in range(spec.n1)) for j in range(spec.n2)]
    p2_l = [
        sum(deg_r[j] - 1 for j in range(spec.n2) if bits[i][j])
        for i in range(spec.n1)
    ]
    p2_r = [
        sum(deg_l[i] - 1 for i in range(spec.n1) if bits[i][j])
        for j in range(spec.n2)
    ]
    ku = sum(1 for b in u if b)
    kv = sum(1 for b in v if b)
    apex_side = sum(
        p2_l[i] + (ku - 1) * deg_l[i] for i in range(spec.n1) if u[i]
    )
    if anchored:
        return apex_side
    base = sum(
        (deg_l[i] - 1) * (deg_r[j] - 1)
        for i in range(spec.n1)
        for j in range(spec.n2)
        if bits[i][j]
    )
    tail_side = sum(
        p2_r[j] + (kv - 1) * deg_r[j] for j in range(spec.n2) if v[j]
    )
    return base + apex_side + tail_side


def _even_cycle_baseline(spec: GadgetSpec) -> int:
    """Number of k-cycles the even-cycle scaffold contains on its own.

    The doubled scaffold carries the band twice, and bits sharing rows and
    columns within one triangular half close even cycles that exist no
    matter what u and v say. A query edge pair only ever completes one new
    k-cycle per (i, j) hit (the cycle through that bit's two band edges and
    the rails between them), so the final count exceeds this baseline
    exactly when the product is 1."""
    return count_cycles(spec.scaffold(), spec.k)


def _check_vector(vec: Sequence[int], name: str) -> Tuple[int, ...]:
    out = tuple(int(b) for b in vec)
    for b in out:
        if b not in (0, 1):
            raise InvalidConfig(f"{name} entries must be 0 or 1")
    return out


def run_reduction(
    spec: GadgetSpec,
    u: Sequence[int],
    v: Sequence[int],
    backend: str = "engine",
) -> ReductionRun:
    """Build the instance, replay its updates, and ask the backend whether
    the target structure is present; `agree` compares that against u' M v.

    Presence means count > 0 except for the 3-path and even-cycle problems,
    where the final graph always holds some target copies and the decision
    is a strict comparison against their vector-independent number."""
    if backend not in BACKENDS:
        raise InvalidConfig(f"unknown backend {backend!r}")
    u = _check_vector(u, "u")
    v = _check_vector(v, "v")
    base = spec.initial_edges()
    updates = spec.updates(u, v)
    max_m = len(spec.static_edges()) + sum(
        len(spec.u_edges(i)) for i in range(spec.n1)
    ) + sum(len(spec.v_edges(j)) for j in range(spec.n2))
    if max_m > MAX_EDGES:
        raise SizeLimit(f"instance peaks at {max_m} edges (limit {MAX_EDGES})")
    expected = spec.matrix.product(u, v)

    if backend == "oracle":
        observed = _run_oracle(spec, u, v, base, updates)
    else:
        observed = _run_engine(spec, u, v, base, updates, anchored=(backend == "anchored"))
    return ReductionRun(spec, backend, base, updates, expected, observed)


def _run_engine(spec, u, v, base, updates, anchored: bool) -> bool:
    pattern = spec.pattern
    if pattern is None:
        raise UnsupportedProblem(
            f"no engine detector for {spec.problem} with k={spec.k}; "
            "use the oracle backend"
        )
    if anchored and spec.problem == EVEN_CYCLE:
        raise UnsupportedProblem("even-cycle instances have no anchor vertex")
    anchors = (spec.apex,) if anchored else ()
    engine = CountingEngine(patterns=(pattern,), anchors=anchors)
    for vertex in spec.vertices():
        engine.graph.ensure_vertex(vertex)
    for a, b in base:
        engine.insert_edge(a, b)
    for op, a, b in updates:
        if op == "+":
            engine.insert_edge(a, b)
        else:
            engine.delete_edge(a, b)
    count = engine.s_query(spec.apex, pattern) if anchored else engine.count(pattern)
    if spec.problem == PATH3_COUNT:
        return count > _path3_threshold(spec, u, v, anchored)
    if spec.problem == EVEN_CYCLE:
        return count > _even_cycle_baseline(spec)
    return count > 0


def _run_oracle(spec, u, v, base, updates) -> bool:
    graph = Graph()
    for vertex in spec.vertices():
        graph.ensure_vertex(vertex)
    for a, b in base:
        graph.insert_edge(a, b)
    for op, a, b in updates:
        if op == "+":
            graph.insert_edge(a, b)
        else:
            graph.delete_edge(a, b)
    if spec.problem == ODD_CYCLE:
        return find_cycle(graph, spec.k)
    if spec.problem == EVEN_CYCLE:
        return count_cycles(graph, spec.k) > _even_cycle_baseline(spec)
    pattern = spec.pattern
    count = oracle_count(graph, pattern)
    if spec.problem == PATH3_COUNT:
        return count > _path3_threshold(spec, u, v, anchored=False)
    return count > 0
