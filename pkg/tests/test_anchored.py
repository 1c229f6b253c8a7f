"""Anchored (single-vertex) counts: delta correctness against the oracle for
edges touching and avoiding the anchor, across partition splits."""

import pytest

from quadcount import ALL_PATTERNS, DEFAULT_EPSILON, CountingEngine
from quadcount.anchored import ANCHORED_TABLES
from quadcount.oracle import oracle_count
from quadcount.tables import ALL_TABLES, VERTEX_TABLES

from helpers import random_edge_stream


def anchored_ok(engine, anchors, step=None):
    for s in anchors:
        for p in ALL_PATTERNS:
            want = oracle_count(engine.graph, p, vertex=s)
            got = engine.s_query(s, p)
            assert got == want, (s, p, step)


def test_anchored_table_plan_is_well_formed():
    for p, (full, scoped) in ANCHORED_TABLES.items():
        assert not set(full) & set(scoped)
        assert set(full) | set(scoped) <= set(ALL_TABLES)
        assert not set(scoped) & VERTEX_TABLES


def test_k4_growth_per_anchor():
    eng = CountingEngine(anchors=(0, 3, 9))
    for u, v in [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]:
        eng.insert_edge(u, v)
    for s in (0, 3):
        assert eng.s_query(s, "triangle") == 3
        assert eng.s_query(s, "path3") == 12  # every path hits all 4 vertices
        assert eng.s_query(s, "k4") == 1
        assert eng.s_query(s, "diamond") == 6
    # vertex 9 stays isolated
    for p in ALL_PATTERNS:
        assert eng.s_query(9, p) == 0


def test_anchor_edge_updates():
    # edges incident to the anchor use the edge-query path; check both growth
    # and the paired deletions
    eng = CountingEngine(anchors=(2,))
    stream = random_edge_stream(n=7, steps=120, seed=55)
    for step, (op, u, v) in enumerate(stream):
        if op == "+":
            eng.insert_edge(u, v)
        else:
            eng.delete_edge(u, v)
        anchored_ok(eng, (2,), step)


@pytest.mark.parametrize("eps", [1 / 3, 1 / 2])
def test_anchored_counts_exact_on_random_streams(eps):
    anchors = (0, 4, 8)
    eng = CountingEngine(epsilon={p: eps for p in DEFAULT_EPSILON}, anchors=anchors)
    stream = random_edge_stream(n=9, steps=220, seed=60)
    for step, (op, u, v) in enumerate(stream):
        if op == "+":
            eng.insert_edge(u, v)
        else:
            eng.delete_edge(u, v)
        anchored_ok(eng, anchors, step)


def test_anchored_counts_survive_rebuilds():
    # long stream on few vertices crosses the rebuild bounds repeatedly
    anchors = (1,)
    eng = CountingEngine(anchors=anchors)
    stream = random_edge_stream(n=6, steps=300, seed=61, insert_bias=0.55)
    for step, (op, u, v) in enumerate(stream):
        if op == "+":
            eng.insert_edge(u, v)
        else:
            eng.delete_edge(u, v)
        anchored_ok(eng, anchors, step)


def test_anchor_may_be_named_before_any_edge():
    eng = CountingEngine(anchors=(5,))
    assert eng.s_query(5, "c4") == 0
    eng.insert_edge(5, 0)
    eng.insert_edge(0, 1)
    eng.insert_edge(1, 5)
    assert eng.s_query(5, "triangle") == 1
