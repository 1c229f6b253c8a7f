"""Stream-driven command-line front end.

The `run` subcommand reads one event per line and answers queries as they
arrive:

    + u v                insert edge
    - u v                delete edge
    q <pattern>          global count (induced if --induced was given)
    qi <pattern>         induced global count
    q <pattern> edge u v occurrences containing the edge
    q triangle vertex v  triangles containing the vertex
    qs <pattern> s       occurrences containing anchor vertex s
    # ...                comment (also allowed after an event)

Patterns: triangle path3 claw paw c4 diamond k4. Each query echoes its
tokens in canonical form followed by the count (a bare q under --induced
echoes as qi), so the output stream is self-describing and diffs cleanly.

`gadget` prints a matrix-product reduction instance as such a stream, and
`report` runs the update-cost scaling study (CSV plus rendered figures).

Exit codes: 0 ok, 2 parse error, 3 bad edge, 4 bad configuration,
5 reference-check mismatch, 6 unsupported reduction, 1 other failures.
"""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass
from typing import IO, Iterable, List, Optional, Sequence

from .engine import DEFAULT_EPSILON, CountingEngine, EngineConfig
from .errors import (
    InvalidConfig,
    InvalidEdge,
    OracleMismatch,
    ParseError,
    QuadcountError,
    UnsupportedProblem,
)
from .gadgets import BoolMatrix, GadgetSpec, PROBLEMS
from .oracle import oracle_count
from .patterns import ALL_PATTERNS, TRIANGLE, check_pattern

INSERT = "insert"
DELETE = "delete"
QUERY_GLOBAL = "query_global"
QUERY_EDGE = "query_edge"
QUERY_VERTEX = "query_vertex"
QUERY_S = "query_s"


@dataclass(frozen=True)
class UpdateEvent:
    """One parsed stream line."""

    kind: str
    pattern: Optional[str] = None
    induced: bool = False
    u: Optional[int] = None
    v: Optional[int] = None
    vertex: Optional[int] = None
    anchor: Optional[int] = None

    def echo(self) -> str:
        if self.kind == INSERT:
            return f"+ {self.u} {self.v}"
        if self.kind == DELETE:
            return f"- {self.u} {self.v}"
        if self.kind == QUERY_GLOBAL:
            return f"{'qi' if self.induced else 'q'} {self.pattern}"
        if self.kind == QUERY_EDGE:
            return f"q {self.pattern} edge {self.u} {self.v}"
        if self.kind == QUERY_VERTEX:
            return f"q triangle vertex {self.vertex}"
        return f"qs {self.pattern} {self.anchor}"


def _int_token(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(lineno, f"expected a vertex id, got {token!r}") from None


def _pattern_token(token: str, lineno: int) -> str:
    if token not in ALL_PATTERNS:
        raise ParseError(
            lineno, f"unknown pattern {token!r} (expected one of {', '.join(ALL_PATTERNS)})"
        )
    return token


def parse_line(raw: str, lineno: int, induced_default: bool = False) -> Optional[UpdateEvent]:
    """One event or None for blank/comment lines; ParseError otherwise."""
    text = raw.split("#", 1)[0].strip()
    if not text:
        return None
    tokens = text.split()
    head = tokens[0]
    if head in ("+", "-"):
        if len(tokens) != 3:
            raise ParseError(lineno, f"'{head}' takes exactly two vertex ids")
        u, v = _int_token(tokens[1], lineno), _int_token(tokens[2], lineno)
        return UpdateEvent(kind=INSERT if head == "+" else DELETE, u=u, v=v)
    if head == "q":
        if len(tokens) == 2:
            return UpdateEvent(
                kind=QUERY_GLOBAL,
                pattern=_pattern_token(tokens[1], lineno),
                induced=induced_default,
            )
        if len(tokens) == 5 and tokens[2] == "edge":
            return UpdateEvent(
                kind=QUERY_EDGE,
                pattern=_pattern_token(tokens[1], lineno),
                u=_int_token(tokens[3], lineno),
                v=_int_token(tokens[4], lineno),
            )
        if len(tokens) == 4 and tokens[1] == TRIANGLE and tokens[2] == "vertex":
            return UpdateEvent(kind=QUERY_VERTEX, vertex=_int_token(tokens[3], lineno))
        raise ParseError(lineno, f"malformed query: {text!r}")
    if head == "qi":
        if len(tokens) != 2:
            raise ParseError(lineno, "'qi' takes exactly one pattern")
        return UpdateEvent(
            kind=QUERY_GLOBAL, pattern=_pattern_token(tokens[1], lineno), induced=True
        )
    if head == "qs":
        if len(tokens) != 3:
            raise ParseError(lineno, "'qs' takes a pattern and an anchor vertex")
        return UpdateEvent(
            kind=QUERY_S,
            pattern=_pattern_token(tokens[1], lineno),
            anchor=_int_token(tokens[2], lineno),
        )
    raise ParseError(lineno, f"unknown event {head!r}")


def _reference_value(engine: CountingEngine, ev: UpdateEvent) -> int:
    graph = engine.graph
    if ev.kind == QUERY_GLOBAL:
        return oracle_count(graph, ev.pattern, induced=ev.induced)
    if ev.kind == QUERY_EDGE:
        return oracle_count(graph, ev.pattern, edge=(ev.u, ev.v))
    if ev.kind == QUERY_VERTEX:
        return oracle_count(graph, TRIANGLE, vertex=ev.vertex)
    return oracle_count(graph, ev.pattern, vertex=ev.anchor)


def _answer(engine: CountingEngine, ev: UpdateEvent) -> int:
    if ev.kind == QUERY_GLOBAL:
        if ev.induced and ev.pattern != TRIANGLE:
            return engine.induced_counts()[ev.pattern]
        return engine.count(ev.pattern)
    if ev.kind == QUERY_EDGE:
        return engine.edge_query(ev.pattern, ev.u, ev.v)
    if ev.kind == QUERY_VERTEX:
        return engine.triangle_vertex_query(ev.vertex)
    return engine.s_query(ev.anchor, ev.pattern)


def run_stream(
    lines: Iterable[str],
    config: Optional[EngineConfig] = None,
    out: Optional[IO] = None,
    induced_default: bool = False,
) -> List[str]:
    """Feed a stream through one engine; returns (and optionally writes)
    the answer lines. Raises on the first malformed line, bad update, or
    (with oracle_check) reference disagreement."""
    config = config or EngineConfig()
    engine = CountingEngine(config)
    results: List[str] = []
    ops_writer = None
    ops_file = None
    step = 0
    try:
        if config.ops_out:
            ops_file = open(config.ops_out, "w", newline="")
            ops_writer = csv.writer(ops_file)
            ops_writer.writerow(["step", "kind", "u", "v", "ops"])
        for lineno, raw in enumerate(lines, 1):
            ev = parse_line(raw, lineno, induced_default)
            if ev is None:
                continue
            if ev.kind in (INSERT, DELETE):
                step += 1
                before = engine.ops.n
                if ev.kind == INSERT:
                    engine.insert_edge(ev.u, ev.v)
                else:
                    engine.delete_edge(ev.u, ev.v)
                if ops_writer:
                    ops_writer.writerow(
                        [step, "+" if ev.kind == INSERT else "-", ev.u, ev.v,
                         engine.ops.n - before]
                    )
                continue
            value = _answer(engine, ev)
            if config.oracle_check:
                want = _reference_value(engine, ev)
                if want != value:
                    raise OracleMismatch(lineno, ev.echo(), value, want)
            line = f"{ev.echo()} {value}"
            results.append(line)
            if out is not None:
                out.write(line + "\n")
    finally:
        if ops_file:
            ops_file.close()
    return results


def emit_gadget(spec: GadgetSpec, u: Sequence[int], v: Sequence[int]) -> str:
    """Serialize one reduction instance as a runnable stream: scaffold
    inserts, the update sequence, then the detection query."""
    pattern = spec.pattern
    if pattern is None:
        raise UnsupportedProblem(
            f"{spec.problem} with k={spec.k} has no engine query to emit"
        )
    lines = [
        f"# {spec.problem} reduction, {spec.direction}, "
        f"n1={spec.n1} n2={spec.n2} g={spec.g} h={spec.h}",
        f"# u={''.join(str(int(b)) for b in u)} v={''.join(str(int(b)) for b in v)}",
    ]
    for a, b in spec.initial_edges():
        lines.append(f"+ {a} {b}")
    for op, a, b in spec.updates(u, v):
        lines.append(f"{op} {a} {b}")
    lines.append(f"q {pattern}")
    return "\n".join(lines) + "\n"


# -- argument handling ----------------------------------------------------


def _parse_patterns(text: str) -> tuple:
    patterns = tuple(tok.strip() for tok in text.split(",") if tok.strip())
    for p in patterns:
        check_pattern(p)
    return patterns


def _parse_epsilon(values: List[str]) -> dict:
    out = {}
    for item in values:
        name, _, val = item.partition("=")
        if not val:
            raise InvalidConfig(f"--epsilon wants <pattern>=<value>, got {item!r}")
        check_pattern(name)
        try:
            out[name] = float(val)
        except ValueError:
            raise InvalidConfig(f"bad epsilon value {val!r}") from None
    return out


def _parse_bits(text: str, name: str) -> tuple:
    try:
        bits = tuple(int(c) for c in text)
    except ValueError:
        raise InvalidConfig(f"--{name} wants a 0/1 string, got {text!r}") from None
    if any(b not in (0, 1) for b in bits):
        raise InvalidConfig(f"--{name} wants a 0/1 string, got {text!r}")
    return bits


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quadcount",
        description="Exact dynamic triangle and four-vertex subgraph counting.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="process an update/query stream")
    run.add_argument("input", nargs="?", help="stream file (default: stdin)")
    run.add_argument("--patterns", default=",".join(ALL_PATTERNS),
                     help="comma-separated pattern list (default: all)")
    run.add_argument("--epsilon", action="append", default=[],
                     metavar="PAT=VAL", help="partition exponent override")
    run.add_argument("--s", default="", metavar="IDS",
                     help="comma-separated anchor vertex ids for qs queries")
    run.add_argument("--induced", action="store_true",
                     help="bare 'q <pattern>' reports induced counts")
    run.add_argument("--oracle-check", action="store_true",
                     help="cross-check every query against the reference counter")
    run.add_argument("--ops-out", metavar="PATH",
                     help="write per-update operation counts as CSV")

    gadget = sub.add_parser("gadget", help="emit a reduction instance stream")
    gadget.add_argument("--problem", required=True, choices=PROBLEMS)
    gadget.add_argument("--k", type=int, default=None,
                        help="cycle length (odd-cycle / even-cycle only)")
    gadget.add_argument("--direction", default="incremental",
                        choices=("incremental", "decremental"))
    gadget.add_argument("--matrix", required=True,
                        help="comma-separated 0/1 rows, e.g. 101,011")
    gadget.add_argument("--u", required=True, help="0/1 string, length n1")
    gadget.add_argument("--v", required=True, help="0/1 string, length n2")

    report = sub.add_parser("report", help="update-cost scaling study")
    report.add_argument("--pattern", default="diamond",
                        help="pattern whose engine is measured (default: diamond)")
    report.add_argument("--sizes", default="1024,4096,16384",
                        help="comma-separated edge counts")
    report.add_argument("--epsilon", type=float, default=None,
                        help="partition exponent (default: the pattern's)")
    report.add_argument("--updates", type=int, default=200,
                        help="measured updates per size (default: 200)")
    report.add_argument("--seed", type=int, default=0)
    report.add_argument("--out-dir", default=".",
                        help="directory for CSV and figures (default: .)")
    return parser


def _cmd_run(args) -> int:
    anchors = tuple(int(tok) for tok in args.s.split(",") if tok.strip())
    config = EngineConfig(
        patterns=_parse_patterns(args.patterns),
        epsilon=_parse_epsilon(args.epsilon),
        anchors=anchors,
        oracle_check=args.oracle_check,
        ops_out=args.ops_out,
    )
    if args.input:
        with open(args.input) as handle:
            run_stream(handle, config, out=sys.stdout, induced_default=args.induced)
    else:
        run_stream(sys.stdin, config, out=sys.stdout, induced_default=args.induced)
    return 0


def _cmd_gadget(args) -> int:
    matrix = BoolMatrix.from_rows(args.matrix.split(","))
    spec = GadgetSpec(matrix, args.problem, k=args.k, direction=args.direction)
    u = _parse_bits(args.u, "u")
    v = _parse_bits(args.v, "v")
    sys.stdout.write(emit_gadget(spec, u, v))
    return 0


def _cmd_report(args) -> int:
    from .report import render_report, scaling_study

    sizes = tuple(int(tok) for tok in args.sizes.split(",") if tok.strip())
    rows = scaling_study(
        pattern=args.pattern,
        sizes=sizes,
        epsilon=args.epsilon,
        updates=args.updates,
        seed=args.seed,
    )
    paths = render_report(rows, args.out_dir, pattern=args.pattern)
    for row in rows:
        print(
            f"m={row['m']} n={row['n']} mean_ops={row['mean_ops']:.1f} "
            f"max_ops={row['max_ops']}"
        )
        for prev in rows:
            if prev["m"] * 4 == row["m"]:
                print(
                    f"  growth vs m={prev['m']}: "
                    f"{row['mean_ops'] / prev['mean_ops']:.2f}x per 4x edges"
                )
    for path in paths:
        print(f"wrote {path}")
    return 0


_EXIT_CODES = (
    (ParseError, 2),
    (InvalidEdge, 3),
    (InvalidConfig, 4),
    (OracleMismatch, 5),
    (UnsupportedProblem, 6),
    (QuadcountError, 1),
)


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    handlers = {"run": _cmd_run, "gadget": _cmd_gadget, "report": _cmd_report}
    try:
        return handlers[args.command](args)
    except QuadcountError as exc:
        print(f"error: {exc}", file=sys.stderr)
        for klass, code in _EXIT_CODES:
            if isinstance(exc, klass):
                return code
        return 1


if __name__ == "__main__":
    sys.exit(main())
