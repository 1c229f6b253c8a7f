"""Empirical update-cost study: logical operations per update as m grows.

The engine's op counter tallies machine-independent work (adjacency tests,
degree lookups, visited neighbors, table reads and writes), so the growth
rate across sizes can be compared against the design's sublinear target
without timing noise. The study grows a random graph to each requested edge
count, then measures a steady-state window of alternating deletions and
insertions that keeps the edge count level.

Vertex count scales as n ~ 6 * (2m)^(2/3), so the average degree grows as
(2m)^(1/3), a fixed fraction of the partition threshold. Degree structure is
then self-similar across sizes (the growth exponent reads cleanly), while
the pair and triple neighborhood tables, whose footprint rises steeply with
density, stay within an ordinary machine's memory at the largest sizes the
acceptance run measures.
"""

from __future__ import annotations

import csv
import random
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

from .engine import DEFAULT_EPSILON, CountingEngine
from .errors import InvalidConfig
from .patterns import check_pattern

DEFAULT_SIZES = (1024, 4096, 16384)


def _random_edges(n: int, m: int, rng: random.Random) -> List[Tuple[int, int]]:
    if m > n * (n - 1) // 2:
        raise InvalidConfig(f"cannot place {m} edges on {n} vertices")
    seen = set()
    edges = []
    while len(edges) < m:
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u == v:
            continue
        e = (u, v) if u < v else (v, u)
        if e in seen:
            continue
        seen.add(e)
        edges.append(e)
    return edges


def measure_update_cost(
    pattern: str,
    m: int,
    epsilon: Optional[float] = None,
    updates: int = 200,
    seed: int = 0,
) -> Dict:
    """Grow a random graph to m edges, then measure `updates` alternating
    delete/insert steps at steady size. Returns the size parameters and the
    mean/max per-update op counts over the measured window."""
    check_pattern(pattern)
    if m < 8:
        raise InvalidConfig("need at least 8 edges for a meaningful window")
    n = max(8, round(6 * (2 * m) ** (2 / 3)))
    rng = random.Random(f"scaling:{seed}:{pattern}:{m}")
    edges = _random_edges(n, m, rng)
    overrides = {pattern: epsilon} if epsilon is not None else {}
    engine = CountingEngine(patterns=(pattern,), epsilon=overrides)
    for u, v in edges:
        engine.insert_edge(u, v)

    present = list(edges)
    present_set = set(edges)
    costs = []
    removed: Optional[Tuple[int, int]] = None
    for step in range(updates):
        if step % 2 == 0:
            idx = rng.randrange(len(present))
            e = present[idx]
            before = engine.ops.n
            engine.delete_edge(*e)
            costs.append(engine.ops.n - before)
            present[idx] = present[-1]
            present.pop()
            present_set.discard(e)
            removed = e
        else:
            while True:
                u = rng.randrange(n)
                v = rng.randrange(n)
                if u == v:
                    continue
                e = (u, v) if u < v else (v, u)
                if e not in present_set:
                    break
            before = engine.ops.n
            engine.insert_edge(*e)
            costs.append(engine.ops.n - before)
            present.append(e)
            present_set.add(e)
            removed = None
    if removed is not None:
        engine.insert_edge(*removed)
    return {
        "pattern": pattern,
        "m": m,
        "n": n,
        "epsilon": epsilon if epsilon is not None else DEFAULT_EPSILON.get(pattern),
        "updates": len(costs),
        "mean_ops": sum(costs) / len(costs),
        "max_ops": max(costs),
    }


def scaling_study(
    pattern: str = "diamond",
    sizes: Sequence[int] = DEFAULT_SIZES,
    epsilon: Optional[float] = None,
    updates: int = 200,
    seed: int = 0,
) -> List[Dict]:
    return [
        measure_update_cost(pattern, m, epsilon=epsilon, updates=updates, seed=seed)
        for m in sorted(sizes)
    ]


def growth_factors(rows: List[Dict]) -> List[Tuple[int, int, float]]:
    """(smaller m, larger m, mean-ops ratio) for each consecutive 4x step."""
    out = []
    for row in rows:
        for prev in rows:
            if prev["m"] * 4 == row["m"]:
                out.append((prev["m"], row["m"], row["mean_ops"] / prev["mean_ops"]))
    return out


def render_report(rows: List[Dict], out_dir: str, pattern: str = "diamond") -> List[str]:
    """Write the study as CSV plus two rendered figures; returns the paths."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    csv_path = out / f"scaling_{pattern}.csv"
    with open(csv_path, "w", newline="") as handle:
        writer = csv.DictWriter(
            handle,
            fieldnames=["pattern", "m", "n", "epsilon", "updates", "mean_ops", "max_ops"],
        )
        writer.writeheader()
        writer.writerows(rows)

    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    ms = [row["m"] for row in rows]
    means = [row["mean_ops"] for row in rows]
    maxes = [row["max_ops"] for row in rows]

    fig, ax = plt.subplots(figsize=(6, 4.5))
    ax.loglog(ms, means, "o-", label="mean ops per update")
    if len(ms) > 1:
        guide = [means[0] * (m / ms[0]) ** (2 / 3) for m in ms]
        linear = [means[0] * (m / ms[0]) for m in ms]
        ax.loglog(ms, guide, "--", color="gray", label="m^(2/3) guide")
        ax.loglog(ms, linear, ":", color="firebrick", label="linear guide")
    ax.set_xlabel("edges m")
    ax.set_ylabel("logical ops per update")
    ax.set_title(f"{pattern} engine update cost")
    ax.grid(True, which="both", alpha=0.3)
    ax.legend()
    fig.tight_layout()
    curve_path = out / f"scaling_{pattern}.png"
    fig.savefig(curve_path, dpi=120)
    plt.close(fig)

    fig, ax = plt.subplots(figsize=(6, 4.5))
    positions = range(len(ms))
    ax.bar([p - 0.2 for p in positions], means, width=0.4, label="mean")
    ax.bar([p + 0.2 for p in positions], maxes, width=0.4, label="max")
    ax.set_xticks(list(positions))
    ax.set_xticklabels([str(m) for m in ms])
    ax.set_yscale("log")
    ax.set_xlabel("edges m")
    ax.set_ylabel("logical ops per update")
    ax.set_title(f"{pattern} engine: per-update cost spread")
    ax.legend()
    fig.tight_layout()
    spread_path = out / f"update_cost_{pattern}.png"
    fig.savefig(spread_path, dpi=120)
    plt.close(fig)

    return [str(csv_path), str(curve_path), str(spread_path)]
