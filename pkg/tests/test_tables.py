"""Auxiliary tables against their definitional recomputation.

Each table is checked two ways: hand-built fixtures with known contents, and
randomized streams where after every update the incrementally maintained
store must equal reference_tables() recomputed from the graph alone.
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quadcount.errors import InconsistentState, InvalidConfig, TableDisabled
from quadcount.graph import Graph
from quadcount.partition import EpsilonPartition, RebuildRequired
from quadcount.tables import (
    ALL_TABLES,
    CLAW_CENTER_LOW,
    COMMON_HIGH,
    COMMON_LOW,
    LOW_TRIPLE_HUB,
    PATH3_LOW,
    PAW_LOW,
    TRIANGLES_HIGH,
    WEDGES_LOW,
    AuxStore,
    pair_key,
    triple_key,
)

from helpers import (
    complete_graph,
    graph_from_edges,
    random_edge_stream,
    reference_tables,
)


def run_maintained(n, stream, epsilon, tables=ALL_TABLES):
    """Replay a stream keeping graph + partition + store in sync, yielding
    (graph, partition, store) after every update."""
    g = Graph()
    for v in range(n):
        g.ensure_vertex(v)
    part = EpsilonPartition(g, epsilon)
    store = AuxStore(tables)
    for op, u, v in stream:
        if op == "+":
            g.insert_edge(u, v)
            store.apply_edge_delta(g, part, u, v, 1)
        else:
            store.apply_edge_delta(g, part, u, v, -1)
            g.delete_edge(u, v)
        for ev in part.after_update(g, u, v):
            if isinstance(ev, RebuildRequired):
                part.init(g)
                store.recompute_from_scratch(g, part)
            else:
                store.apply_partition_move(g, part, ev.vertex, part.is_high(ev.vertex))
        yield g, part, store


def test_pair_and_triple_keys():
    assert pair_key(5, 2) == (2, 5)
    assert triple_key(9, 1, 4) == (1, 4, 9)
    assert triple_key(1, 2, 3) == (1, 2, 3)


def test_wedge_and_common_low_on_short_path():
    # path 0-1-2, everything Low: the single wedge is seen from both ends
    g = graph_from_edges([(0, 1), (1, 2)])
    part = EpsilonPartition(g, 0.9)  # threshold ~3.5 keeps the midpoint Low
    assert part.high_vertices() == set()
    ref = reference_tables(g, part)
    assert ref[WEDGES_LOW] == {0: 1, 2: 1}
    assert ref[COMMON_LOW] == {(0, 2): 1}
    assert ref[PATH3_LOW] == {}


def test_reference_tables_on_all_low_k4():
    g = complete_graph(4)
    part = EpsilonPartition(g, 0.9)  # threshold ~5, everyone Low
    assert part.high_vertices() == set()
    ref = reference_tables(g, part)
    assert ref[COMMON_LOW] == {pair_key(a, b): 2 for a in range(4) for b in range(a + 1, 4)}
    assert ref[LOW_TRIPLE_HUB] == {(0, 1, 2): 1, (0, 1, 3): 1, (0, 2, 3): 1, (1, 2, 3): 1}
    assert ref[TRIANGLES_HIGH] == {}
    # each K4 edge closes one 3-path between its endpoints (the long way round)
    assert ref[PATH3_LOW] == {pair_key(a, b): 2 for a in range(4) for b in range(a + 1, 4)}


def test_store_matches_reference_after_every_update():
    for seed in (0, 1, 2):
        for eps in (1 / 3, 1 / 2):
            stream = random_edge_stream(n=9, steps=220, seed=seed)
            for step, (g, part, store) in enumerate(run_maintained(9, stream, eps)):
                ref = reference_tables(g, part)
                dump = store.dump()
                for table in ALL_TABLES:
                    assert dump[table] == ref[table], (seed, eps, step, table)


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=0, max_value=10_000), st.sampled_from([1 / 3, 1 / 2]))
def test_store_matches_reference_property(seed, eps):
    stream = random_edge_stream(n=7, steps=60, seed=seed)
    for g, part, store in run_maintained(7, stream, eps):
        ref = reference_tables(g, part)
        dump = store.dump()
        for table in ALL_TABLES:
            assert dump[table] == ref[table]


def test_simultaneous_promotion_of_both_endpoints():
    # Degrees arranged so that inserting {0, 8} pushes both endpoints over
    # the promotion bar in the same settle; the 3-paths whose two interior
    # vertices are exactly {0, 8} must still leave the tables. Hysteresis is
    # what allows this: the extra edges arrive after init, so 0 and 8 sit
    # Low at degree 4 with the promotion bar at 1.5 * 26**(1/3) ~ 4.44.
    g = Graph()
    for i in range(13):
        g.insert_edge(i, i + 1)  # path, all degrees <= 2
    part = EpsilonPartition(g, 1 / 3)  # capacity 26, threshold ~2.96
    assert part.high_vertices() == set()
    store = AuxStore(ALL_TABLES)
    store.recompute_from_scratch(g, part)

    for u, v in ((0, 20), (0, 21), (0, 22), (8, 23), (8, 24)):
        g.insert_edge(u, v)
        store.apply_edge_delta(g, part, u, v, 1)
        assert list(part.after_update(g, u, v)) == []

    g.insert_edge(0, 8)  # degree 5 on both sides
    store.apply_edge_delta(g, part, 0, 8, 1)
    moved = []
    for ev in part.after_update(g, 0, 8):
        moved.append(ev.vertex)
        store.apply_partition_move(g, part, ev.vertex, True)
    assert moved == [0, 8]
    ref = reference_tables(g, part)
    dump = store.dump()
    for table in ALL_TABLES:
        assert dump[table] == ref[table], table


def test_insert_delete_round_trip_restores_tables():
    stream = random_edge_stream(n=8, steps=120, seed=9)
    runs = run_maintained(8, stream, 1 / 2)
    states = list(runs)
    g, part, store = states[-1]
    candidates = [e for e in g.edges()]
    for u, v in candidates[:5]:
        before = store.dump()
        store.apply_edge_delta(g, part, u, v, -1)
        g.delete_edge(u, v)
        g.insert_edge(u, v)
        store.apply_edge_delta(g, part, u, v, 1)
        assert store.dump() == before


def test_sparsity_no_zero_entries():
    stream = random_edge_stream(n=8, steps=150, seed=4)
    for g, part, store in run_maintained(8, stream, 1 / 2):
        for table, data in store.dump().items():
            assert all(value != 0 for value in data.values()), table


def test_enable_is_reference_counted():
    store = AuxStore()
    store.enable(COMMON_LOW)
    store.enable(COMMON_LOW)
    store.disable(COMMON_LOW)
    assert store.is_active(COMMON_LOW)
    store.disable(COMMON_LOW)
    assert not store.is_active(COMMON_LOW)
    with pytest.raises(TableDisabled):
        store.disable(COMMON_LOW)


def test_read_of_inactive_table_fails():
    store = AuxStore((WEDGES_LOW,))
    with pytest.raises(TableDisabled):
        store.get(COMMON_LOW, (0, 1))


def test_unknown_table_rejected():
    with pytest.raises(InvalidConfig):
        AuxStore(("no_such_table",))


def test_scoped_store_drops_foreign_writes_and_rejects_foreign_reads():
    g = complete_graph(4)
    part = EpsilonPartition(g, 0.9)
    store = AuxStore((COMMON_LOW,), scope=0, scoped_tables=(COMMON_LOW,))
    store.recompute_from_scratch(g, part)
    assert store.get(COMMON_LOW, pair_key(0, 3)) == 2
    with pytest.raises(TableDisabled):
        store.get(COMMON_LOW, pair_key(1, 2))
    assert set(store.dump()[COMMON_LOW]) == {(0, 1), (0, 2), (0, 3)}


def test_scope_validation():
    with pytest.raises(InvalidConfig):
        AuxStore((COMMON_LOW,), scoped_tables=(COMMON_LOW,))  # no scope vertex
    with pytest.raises(InvalidConfig):
        AuxStore((WEDGES_LOW,), scope=0, scoped_tables=(WEDGES_LOW,))


def test_scoped_store_tracks_reference_restricted_to_anchor():
    stream = random_edge_stream(n=8, steps=150, seed=21)
    g = Graph()
    for v in range(8):
        g.ensure_vertex(v)
    part = EpsilonPartition(g, 1 / 2)
    store = AuxStore(
        (COMMON_LOW, LOW_TRIPLE_HUB),
        scope=3,
        scoped_tables=(COMMON_LOW, LOW_TRIPLE_HUB),
    )
    for op, u, v in stream:
        if op == "+":
            g.insert_edge(u, v)
            store.apply_edge_delta(g, part, u, v, 1)
        else:
            store.apply_edge_delta(g, part, u, v, -1)
            g.delete_edge(u, v)
        for ev in part.after_update(g, u, v):
            if isinstance(ev, RebuildRequired):
                part.init(g)
                store.recompute_from_scratch(g, part)
            else:
                store.apply_partition_move(g, part, ev.vertex, part.is_high(ev.vertex))
        ref = reference_tables(g, part)
        dump = store.dump()
        assert dump[COMMON_LOW] == {
            k: c for k, c in ref[COMMON_LOW].items() if 3 in k
        }
        assert dump[LOW_TRIPLE_HUB] == {
            k: c for k, c in ref[LOW_TRIPLE_HUB].items() if 3 in k
        }


def test_negative_count_raises():
    g = graph_from_edges([(0, 1), (1, 2)])
    part = EpsilonPartition(g, 0.5)
    store = AuxStore((COMMON_LOW,))
    # deleting a delta that was never added drives common_low negative
    g.insert_edge(0, 2)
    with pytest.raises(InconsistentState):
        store.apply_edge_delta(g, part, 0, 2, -1)


def test_delta_requires_edge_present():
    g = graph_from_edges([(0, 1)])
    part = EpsilonPartition(g, 0.5)
    store = AuxStore((WEDGES_LOW,))
    with pytest.raises(InconsistentState):
        store.apply_edge_delta(g, part, 0, 2, 1)


def test_move_requires_flipped_side():
    g = complete_graph(4)
    part = EpsilonPartition(g, 0.9)
    store = AuxStore((COMMON_LOW,))
    with pytest.raises(InconsistentState):
        store.apply_partition_move(g, part, 0, True)  # 0 is still Low
